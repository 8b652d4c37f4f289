#include "facekit/comodule.hpp"

#include <map>
#include <sstream>

#include "facekit/errors.hpp"

namespace facekit {

Comodule simple_comodule(const FaceAlgebra& alg, int xi) {
    const auto& f = alg.fiber.fiber(xi);
    Comodule M;
    M.dim = static_cast<int>(f.size());
    M.coaction.resize(M.dim);
    M.faces.resize(M.dim);
    for (int a = 0; a < M.dim; ++a) {
        M.faces[a] = {f[a].left, f[a].right};
        // delta(x_J) = sum_K x_K ox kappa_xi(x^K ox x_J)
        for (int K = 0; K < M.dim; ++K)
            M.coaction[a].push_back(CoactTerm{K, alg.index_of(xi, K, a), alg.one()});
    }
    return M;
}

Comodule unit_comodule(const FaceAlgebra& alg) {
    return simple_comodule(alg, alg.unit_object);
}

Comodule tensor_comodules(const FaceAlgebra& alg, const Comodule& M,
                          const Comodule& N) {
    Comodule out;
    std::map<std::pair<int, int>, int> pos;
    for (int a = 0; a < M.dim; ++a)
        for (int b = 0; b < N.dim; ++b)
            if (M.faces[a].second == N.faces[b].first) {
                pos[{a, b}] = out.dim++;
                out.faces.push_back({M.faces[a].first, N.faces[b].second});
            }
    out.coaction.resize(out.dim);
    for (const auto& [ab, idx] : pos) {
        auto [a, b] = ab;
        // delta(m ox n) = sum (m0 ox n0) ox m1 n1
        std::map<std::pair<int, int>, LinComb> acc;
        for (const CoactTerm& tm : M.coaction[a])
            for (const CoactTerm& tn : N.coaction[b]) {
                const LinComb& prod = alg.mul(tm.alg, tn.alg);
                if (prod.empty()) continue;
                acc[{tm.vec, tn.vec}].add_scaled(prod, tm.coeff * tn.coeff);
            }
        for (auto& [key, lc] : acc) {
            if (lc.empty()) continue;
            auto it = pos.find(key);
            if (it == pos.end())
                throw ValidationError(
                    "tensor comodule coaction escapes the face-matched basis");
            for (const auto& [h, c] : lc.terms())
                out.coaction[idx].push_back(CoactTerm{it->second, h, c});
        }
    }
    return out;
}

Comodule dual_comodule(const FaceAlgebra& alg, const Comodule& M) {
    if (!alg.has_antipode())
        throw UnsupportedOperationError(
            "dual comodule requires an antipode table");
    Comodule out;
    out.dim = M.dim;
    out.faces.resize(M.dim);
    out.coaction.resize(M.dim);
    for (int a = 0; a < M.dim; ++a)
        out.faces[a] = {M.faces[a].second, M.faces[a].first};
    // delta(m^A) = sum_C m^C ox S(c^A_C) where delta(m_C) = sum_A m_A ox c^A_C
    std::vector<std::map<int, LinComb>> rows(M.dim);
    for (int C = 0; C < M.dim; ++C)
        for (const CoactTerm& t : M.coaction[C]) {
            LinComb s;
            s.add_scaled(alg.antipode[t.alg], t.coeff);
            rows[t.vec][C].add_scaled(s, alg.one());
        }
    for (int A = 0; A < M.dim; ++A)
        for (const auto& [C, lc] : rows[A])
            for (const auto& [h, c] : lc.terms())
                out.coaction[A].push_back(CoactTerm{C, h, c});
    return out;
}

std::vector<CycMatrix> intertwiner_space(const FaceAlgebra& alg,
                                         const Comodule& M, const Comodule& N) {
    // unknowns phi[q][a] restricted to face-matched (q, a); a comodule map
    // is automatically a face map, so the restriction is lossless
    std::vector<std::pair<int, int>> unknowns;
    std::map<std::pair<int, int>, int> upos;
    for (int q = 0; q < N.dim; ++q)
        for (int a = 0; a < M.dim; ++a)
            if (N.faces[q] == M.faces[a]) {
                upos[{q, a}] = static_cast<int>(unknowns.size());
                unknowns.push_back({q, a});
            }
    if (unknowns.empty()) return {};

    // equations over (a, q', h): sum_q coactN(q -> q', h) phi[q][a]
    //                          - sum_a' coactM(a -> a', h) phi[q'][a'] = 0
    std::map<std::tuple<int, int, int>, std::map<int, Cyclotomic>> eqs;
    auto accumulate = [&](std::map<int, Cyclotomic>& row, int col,
                          const Cyclotomic& c) {
        auto [it, fresh] = row.try_emplace(col, c);
        if (!fresh) it->second += c;
    };
    for (int a = 0; a < M.dim; ++a) {
        for (int q = 0; q < N.dim; ++q) {
            auto it = upos.find({q, a});
            if (it == upos.end()) continue;
            for (const CoactTerm& t : N.coaction[q])
                accumulate(eqs[{a, t.vec, t.alg}], it->second, t.coeff);
        }
        for (const CoactTerm& t : M.coaction[a])
            for (int qp = 0; qp < N.dim; ++qp) {
                auto it = upos.find({qp, t.vec});
                if (it == upos.end()) continue;
                accumulate(eqs[{a, qp, t.alg}], it->second, -t.coeff);
            }
    }
    CycMatrix A(eqs.size(), unknowns.size(), alg.conductor);
    std::size_t r = 0;
    for (const auto& [key, row] : eqs) {
        for (const auto& [c, val] : row) A.at(r, c) = val;
        ++r;
    }
    auto basis = nullspace(A);
    std::vector<CycMatrix> out;
    for (const auto& v : basis) {
        CycMatrix phi(N.dim, M.dim, alg.conductor);
        for (std::size_t k = 0; k < unknowns.size(); ++k)
            phi.at(unknowns[k].first, unknowns[k].second) = v[k];
        out.push_back(std::move(phi));
    }
    return out;
}

namespace {

// delta applied to phi(m_a), minus (phi ox id) delta(m_a); zero iff the
// map intertwines at basis vector a
std::map<std::pair<int, int>, Cyclotomic> defect(const Comodule& M,
                                                 const Comodule& N,
                                                 const CycMatrix& phi, int a) {
    std::map<std::pair<int, int>, Cyclotomic> acc;
    auto add = [&](int vec, int h, const Cyclotomic& c) {
        auto [it, fresh] = acc.try_emplace({vec, h}, c);
        if (!fresh) it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    };
    for (int q = 0; q < N.dim; ++q) {
        if (phi.at(q, a).is_zero()) continue;
        for (const CoactTerm& t : N.coaction[q])
            add(t.vec, t.alg, phi.at(q, a) * t.coeff);
    }
    for (const CoactTerm& t : M.coaction[a])
        for (int q = 0; q < N.dim; ++q) {
            if (phi.at(q, t.vec).is_zero()) continue;
            add(q, t.alg, -(t.coeff * phi.at(q, t.vec)));
        }
    return acc;
}

}  // namespace

bool is_comodule_map(const FaceAlgebra&, const Comodule& M,
                     const Comodule& N, const CycMatrix& phi) {
    for (int a = 0; a < M.dim; ++a)
        if (!defect(M, N, phi, a).empty()) return false;
    return true;
}

std::string check_comodule(const FaceAlgebra& alg, const Comodule& M) {
    // counit: (id ox eps) delta = id
    for (int a = 0; a < M.dim; ++a) {
        std::map<int, Cyclotomic> acc;
        for (const CoactTerm& t : M.coaction[a]) {
            Cyclotomic c = t.coeff * alg.counit[t.alg];
            if (c.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(t.vec, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        bool ok = acc.size() == 1 && acc.begin()->first == a &&
                  acc.begin()->second.is_one();
        if (!ok) {
            std::ostringstream os;
            os << "counit law fails at basis vector " << a;
            return os.str();
        }
    }
    // coassociativity: (delta ox id) delta = (id ox Delta) delta
    for (int a = 0; a < M.dim; ++a) {
        std::map<std::tuple<int, int, int>, Cyclotomic> lhs, rhs;
        auto add = [](auto& m, const std::tuple<int, int, int>& k,
                      const Cyclotomic& c) {
            auto [it, fresh] = m.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const CoactTerm& t : M.coaction[a])
            for (const CoactTerm& s : M.coaction[t.vec])
                add(lhs, {s.vec, s.alg, t.alg}, t.coeff * s.coeff);
        for (const CoactTerm& t : M.coaction[a])
            for (const CoTerm& ct : alg.coproduct[t.alg])
                add(rhs, {t.vec, ct.left, ct.right}, t.coeff * ct.coeff);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "coassociativity fails at basis vector " << a;
            return os.str();
        }
    }
    // faces: lam m mu = sum m0 eps(lam m1 mu) must match the declared faces
    int V = alg.objects();
    for (int a = 0; a < M.dim; ++a)
        for (int lam = 0; lam < V; ++lam)
            for (int mu = 0; mu < V; ++mu) {
                std::map<int, Cyclotomic> acc;
                for (const CoactTerm& t : M.coaction[a]) {
                    // eps(lam h mu) with lam, mu acting through eta
                    LinComb h;
                    h.add(t.alg, t.coeff);
                    LinComb lhm = alg.mul(alg.mul(alg.face_right(lam), h),
                                          alg.face_right(mu));
                    Cyclotomic eps = alg.zero();
                    for (const auto& [k, c] : lhm.terms())
                        eps += c * alg.counit[k];
                    if (eps.is_zero()) continue;
                    auto [it, fresh] = acc.try_emplace(t.vec, eps);
                    if (!fresh) {
                        it->second += eps;
                        if (it->second.is_zero()) acc.erase(it);
                    }
                }
                bool expect = M.faces[a] == std::make_pair(lam, mu);
                bool got = acc.size() == 1 && acc.begin()->first == a &&
                           acc.begin()->second.is_one();
                if (expect ? !got : !acc.empty()) {
                    std::ostringstream os;
                    os << "face weights fail at basis vector " << a << " for ("
                       << alg.object_names[lam] << "," << alg.object_names[mu]
                       << ")";
                    return os.str();
                }
            }
    return {};
}

}  // namespace facekit
