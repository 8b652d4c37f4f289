#include "facekit/axioms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"
#include "facekit/parallel.hpp"

namespace facekit {

namespace {

// pairwise / elementwise sweep over [0, n); fn(i) returns a failure
// description or nothing; merged deterministically (first failing index)
AxiomEntry sweep(const std::string& axiom, std::uint64_t n,
                 const std::function<std::optional<std::string>(std::uint64_t)>& fn) {
    struct Chunk {
        std::uint64_t failures = 0;
        std::uint64_t first_idx = 0;
        std::string first;
    };
    std::vector<Chunk> chunks(worker_threads());
    parallel_chunks(n, [&](std::uint64_t lo, std::uint64_t hi, unsigned w) {
        Chunk& ck = chunks[w];
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto fail = fn(i);
            if (fail) {
                if (ck.failures == 0) {
                    ck.first_idx = i;
                    ck.first = *fail;
                }
                ++ck.failures;
            }
        }
    });
    AxiomEntry e{axiom, true, n, 0, ""};
    std::uint64_t best = ~0ull;
    for (const Chunk& ck : chunks) {
        e.failures += ck.failures;
        if (ck.failures && ck.first_idx < best) {
            best = ck.first_idx;
            e.first_fail = ck.first;
        }
    }
    e.pass = e.failures == 0;
    return e;
}

// seeded index sample of [0, n) used when a sweep space is beyond the
// exhaustive budget
std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t count,
                                          std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    std::vector<std::uint64_t> out(count);
    for (auto& s : out) s = pick(rng);
    return out;
}

AxiomEntry sweep_sampled(const std::string& axiom, std::uint64_t space,
                         bool exhaustive, const CheckOptions& opt,
                         const std::function<std::optional<std::string>(std::uint64_t)>& fn) {
    if (exhaustive || space <= opt.sample_size) return sweep(axiom, space, fn);
    auto samples = sample_indices(space, opt.sample_size, opt.seed);
    return sweep(axiom, samples.size(),
                 [&](std::uint64_t i) { return fn(samples[i]); });
}

using Pair = std::pair<int, int>;
using PairMap = std::map<Pair, Cyclotomic>;

void pm_add(PairMap& m, const Pair& k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

LinComb singleton(const FaceAlgebra& alg, int u) {
    LinComb e;
    e.add(u, alg.one());
    return e;
}

Cyclotomic eps(const FaceAlgebra& alg, const LinComb& a) {
    Cyclotomic out = alg.zero();
    for (const auto& [k, c] : a.terms()) out += c * alg.counit[k];
    return out;
}

// Delta of a linear combination as a map (left,right) -> coeff
PairMap coproduct_of(const FaceAlgebra& alg, const LinComb& a) {
    PairMap out;
    for (const auto& [k, c] : a.terms())
        for (const CoTerm& t : alg.coproduct[k])
            pm_add(out, {t.left, t.right}, c * t.coeff);
    return out;
}

std::string two(const FaceAlgebra& alg, int u, int v) {
    return "u=" + alg.basis_name(u) + " v=" + alg.basis_name(v);
}

std::string lc_str(const FaceAlgebra& alg, const LinComb& a) {
    if (a.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + alg.basis_name(k);
    }
    return out;
}

std::string pm_str(const FaceAlgebra& alg, const PairMap& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : m) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*" + alg.basis_name(key.first) + "(x)" +
               alg.basis_name(key.second);
    }
    return out;
}

std::string sides(const FaceAlgebra& alg, const LinComb& lhs, const LinComb& rhs) {
    return " lhs=" + lc_str(alg, lhs) + " rhs=" + lc_str(alg, rhs);
}

std::string sides(const FaceAlgebra& alg, const PairMap& lhs, const PairMap& rhs) {
    return " lhs=" + pm_str(alg, lhs) + " rhs=" + pm_str(alg, rhs);
}

}  // namespace

bool AxiomReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

void AxiomReport::append(const AxiomReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
}

std::string report_text(const AxiomReport& rep) {
    std::ostringstream os;
    for (const auto& e : rep.entries) {
        os << (e.pass ? "[pass] " : "[FAIL] ") << e.axiom;
        for (std::size_t i = e.axiom.size(); i < 14; ++i) os << ' ';
        os << " checked=" << e.checked;
        if (!e.pass)
            os << " failures=" << e.failures << " first: " << e.first_fail;
        os << "\n";
    }
    os << (rep.all_pass() ? "ALL PASS" : "SUITE FAILED") << "\n";
    return os.str();
}

AxiomReport check_face_algebra(const FaceAlgebra& alg, const CheckOptions& opt) {
    AxiomReport rep;
    const std::uint64_t dim = alg.dim;
    const int V = alg.objects();

    rep.entries.push_back(sweep("unit", dim, [&](std::uint64_t u) -> std::optional<std::string> {
        LinComb e = singleton(alg, static_cast<int>(u));
        LinComb left = alg.mul(alg.unit_element, e);
        if (left != e)
            return "1*u != u at u=" + alg.basis_name(static_cast<int>(u)) +
                   sides(alg, left, e);
        LinComb right = alg.mul(e, alg.unit_element);
        if (right != e)
            return "u*1 != u at u=" + alg.basis_name(static_cast<int>(u)) +
                   sides(alg, right, e);
        return std::nullopt;
    }));

    // associativity triples: exhaustive at Full, or at Fast when small;
    // sampled with the fixed seed otherwise
    rep.entries.push_back(sweep_sampled(
        "assoc", dim * dim * dim, opt.level == CheckLevel::Full || dim <= 64,
        opt, [&](std::uint64_t i) -> std::optional<std::string> {
            int w = static_cast<int>(i % dim);
            int v = static_cast<int>((i / dim) % dim);
            int u = static_cast<int>(i / (dim * dim));
            LinComb lhs = alg.mul(alg.mul(u, v), singleton(alg, w));
            LinComb rhs = alg.mul(singleton(alg, u), alg.mul(v, w));
            if (lhs != rhs)
                return two(alg, u, v) + " w=" + alg.basis_name(w) +
                       sides(alg, lhs, rhs);
            return std::nullopt;
        }));

    rep.entries.push_back(sweep("coassoc", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        std::map<std::tuple<int, int, int>, Cyclotomic> lhs, rhs;
        auto add = [](auto& m, const std::tuple<int, int, int>& k, const Cyclotomic& c) {
            if (c.is_zero()) return;
            auto [it, fresh] = m.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) m.erase(it);
            }
        };
        for (const CoTerm& t : alg.coproduct[u])
            for (const CoTerm& s : alg.coproduct[t.left])
                add(lhs, {s.left, s.right, t.right}, t.coeff * s.coeff);
        for (const CoTerm& t : alg.coproduct[u])
            for (const CoTerm& s : alg.coproduct[t.right])
                add(rhs, {t.left, s.left, s.right}, t.coeff * s.coeff);
        if (lhs != rhs) return "at u=" + alg.basis_name(u);
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("counit", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        LinComb left, right;
        for (const CoTerm& t : alg.coproduct[u]) {
            left.add(t.right, t.coeff * alg.counit[t.left]);
            right.add(t.left, t.coeff * alg.counit[t.right]);
        }
        LinComb e = singleton(alg, u);
        if (left != e) return "(eps ox id) Delta != id at u=" + alg.basis_name(u);
        if (right != e) return "(id ox eps) Delta != id at u=" + alg.basis_name(u);
        return std::nullopt;
    }));

    const bool pair_exhaustive = dim <= 256;
    rep.entries.push_back(sweep_sampled("D(ab)", dim * dim, pair_exhaustive, opt,
                                        [&](std::uint64_t i) -> std::optional<std::string> {
        int u = static_cast<int>(i / dim), v = static_cast<int>(i % dim);
        PairMap lhs = coproduct_of(alg, alg.mul(u, v));
        PairMap rhs;
        for (const CoTerm& tu : alg.coproduct[u])
            for (const CoTerm& tv : alg.coproduct[v]) {
                const LinComb& p1 = alg.mul(tu.left, tv.left);
                if (p1.empty()) continue;
                const LinComb& p2 = alg.mul(tu.right, tv.right);
                if (p2.empty()) continue;
                Cyclotomic c = tu.coeff * tv.coeff;
                for (const auto& [w1, a] : p1.terms())
                    for (const auto& [w2, b] : p2.terms())
                        pm_add(rhs, {w1, w2}, c * a * b);
            }
        if (lhs != rhs) return two(alg, u, v) + sides(alg, lhs, rhs);
        return std::nullopt;
    }));

    {
        // eps(u * nu) and eps(nu-dotted * v) tables for the weak counit law
        std::vector<Cyclotomic> right_eps(dim * V, alg.zero());
        std::vector<Cyclotomic> left_eps(dim * V, alg.zero());
        std::vector<LinComb> face_r(V), face_l(V);
        for (int nu = 0; nu < V; ++nu) {
            face_r[nu] = alg.face_right(nu);
            face_l[nu] = alg.face_left(nu);
        }
        parallel_chunks(dim, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
            for (std::uint64_t u = lo; u < hi; ++u) {
                LinComb e = singleton(alg, static_cast<int>(u));
                for (int nu = 0; nu < V; ++nu) {
                    right_eps[u * V + nu] = eps(alg, alg.mul(e, face_r[nu]));
                    left_eps[u * V + nu] = eps(alg, alg.mul(face_l[nu], e));
                }
            }
        });
        rep.entries.push_back(sweep_sampled("e(ab)", dim * dim, pair_exhaustive,
                                            opt, [&](std::uint64_t i) -> std::optional<std::string> {
            int u = static_cast<int>(i / dim), v = static_cast<int>(i % dim);
            Cyclotomic lhs = eps(alg, alg.mul(u, v));
            Cyclotomic rhs = alg.zero();
            for (int nu = 0; nu < V; ++nu)
                rhs += right_eps[u * V + nu] * left_eps[v * V + nu];
            if (lhs != rhs)
                return two(alg, u, v) + " lhs=" + lhs.str() + " rhs=" + rhs.str();
            return std::nullopt;
        }));
    }

    rep.entries.push_back(sweep("D(ee)", static_cast<std::uint64_t>(V) * V, [&](std::uint64_t i) -> std::optional<std::string> {
        int lam = static_cast<int>(i / V), mu = static_cast<int>(i % V);
        PairMap lhs = coproduct_of(alg, alg.eta_of(lam, mu));
        PairMap rhs;
        for (int nu = 0; nu < V; ++nu)
            for (const auto& [a, ca] : alg.eta_of(lam, nu).terms())
                for (const auto& [b, cb] : alg.eta_of(nu, mu).terms())
                    pm_add(rhs, {a, b}, ca * cb);
        if (lhs != rhs)
            return "Delta(eta(" + alg.object_names[lam] + "," +
                   alg.object_names[mu] + ")) mismatch" + sides(alg, lhs, rhs);
        Cyclotomic e = eps(alg, alg.eta_of(lam, mu));
        Cyclotomic want = lam == mu ? alg.one() : alg.zero();
        if (e != want)
            return "eps(eta(" + alg.object_names[lam] + "," +
                   alg.object_names[mu] + ")) != " + want.str();
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("eta-algmap",
                                static_cast<std::uint64_t>(V) * V * V * V + 1,
                                [&](std::uint64_t i) -> std::optional<std::string> {
        if (i == static_cast<std::uint64_t>(V) * V * V * V) {
            LinComb sum;
            for (int lam = 0; lam < V; ++lam)
                for (int mu = 0; mu < V; ++mu)
                    sum.add_scaled(alg.eta_of(lam, mu), alg.one());
            if (sum != alg.unit_element) return std::string("sum eta != 1");
            return std::nullopt;
        }
        int mu2 = static_cast<int>(i % V);
        int lam2 = static_cast<int>((i / V) % V);
        int mu1 = static_cast<int>((i / V / V) % V);
        int lam1 = static_cast<int>(i / V / V / V);
        LinComb got = alg.mul(alg.eta_of(lam1, mu1), alg.eta_of(lam2, mu2));
        LinComb want;
        if (lam1 == lam2 && mu1 == mu2)
            want.add_scaled(alg.eta_of(lam1, mu1), alg.one());
        if (got != want)
            return "eta(" + alg.object_names[lam1] + "," + alg.object_names[mu1] +
                   ")*eta(" + alg.object_names[lam2] + "," +
                   alg.object_names[mu2] + ")" + sides(alg, got, want);
        return std::nullopt;
    }));

    {
        std::vector<LinComb> face_r(V), face_l(V);
        for (int nu = 0; nu < V; ++nu) {
            face_r[nu] = alg.face_right(nu);
            face_l[nu] = alg.face_left(nu);
        }
        std::uint64_t vv = static_cast<std::uint64_t>(V) * V;
        rep.entries.push_back(sweep_sampled("D(eeaee)", vv * vv * dim,
                                            pair_exhaustive, opt,
                                            [&](std::uint64_t i) -> std::optional<std::string> {
            int c = static_cast<int>(i % dim);
            std::uint64_t r = i / dim;
            int mu2 = static_cast<int>(r % V);
            int lam2 = static_cast<int>((r / V) % V);
            int mu1 = static_cast<int>((r / V / V) % V);
            int lam1 = static_cast<int>(r / V / V / V);
            LinComb mid = alg.mul(alg.eta_of(lam1, mu1),
                                  alg.mul(singleton(alg, c), alg.eta_of(lam2, mu2)));
            PairMap lhs = coproduct_of(alg, mid);
            PairMap rhs;
            for (const CoTerm& t : alg.coproduct[c]) {
                LinComb a = alg.mul(face_l[lam1], alg.mul(singleton(alg, t.left), face_l[lam2]));
                if (a.empty()) continue;
                LinComb b = alg.mul(face_r[mu1], alg.mul(singleton(alg, t.right), face_r[mu2]));
                if (b.empty()) continue;
                for (const auto& [w1, ca] : a.terms())
                    for (const auto& [w2, cb] : b.terms())
                        pm_add(rhs, {w1, w2}, t.coeff * ca * cb);
            }
            if (lhs != rhs)
                return "c=" + alg.basis_name(c) + " faces (" +
                       alg.object_names[lam1] + "," + alg.object_names[mu1] +
                       ")x(" + alg.object_names[lam2] + "," +
                       alg.object_names[mu2] + ")" + sides(alg, lhs, rhs);
            return std::nullopt;
        }));

        rep.entries.push_back(sweep("eae*a", vv * dim, [&](std::uint64_t i) -> std::optional<std::string> {
            int c = static_cast<int>(i % dim);
            std::uint64_t r = i / dim;
            int mu = static_cast<int>(r % V);
            int lam = static_cast<int>(r / V);
            PairMap lhs, rhs;
            for (const CoTerm& t : alg.coproduct[c]) {
                LinComb a = alg.mul(face_r[lam], alg.mul(singleton(alg, t.left), face_r[mu]));
                for (const auto& [w1, ca] : a.terms())
                    pm_add(lhs, {w1, t.right}, t.coeff * ca);
                LinComb b = alg.mul(face_l[lam], alg.mul(singleton(alg, t.right), face_l[mu]));
                for (const auto& [w2, cb] : b.terms())
                    pm_add(rhs, {t.left, w2}, t.coeff * cb);
            }
            if (lhs != rhs)
                return "c=" + alg.basis_name(c) + " (" + alg.object_names[lam] +
                       "," + alg.object_names[mu] + ")" + sides(alg, lhs, rhs);
            return std::nullopt;
        }));

        rep.entries.push_back(sweep("e(ee)", vv * dim, [&](std::uint64_t i) -> std::optional<std::string> {
            int c = static_cast<int>(i % dim);
            std::uint64_t r = i / dim;
            int mu = static_cast<int>(r % V);
            int lam = static_cast<int>(r / V);
            LinComb e = singleton(alg, c);
            Cyclotomic lhs = eps(alg, alg.mul(face_l[lam], alg.mul(e, face_l[mu])));
            Cyclotomic rhs = eps(alg, alg.mul(face_r[lam], alg.mul(e, face_r[mu])));
            if (lhs != rhs)
                return "c=" + alg.basis_name(c) + " (" + alg.object_names[lam] +
                       "," + alg.object_names[mu] + ") lhs=" + lhs.str() +
                       " rhs=" + rhs.str();
            return std::nullopt;
        }));
    }

    return rep;
}

AxiomReport check_antipode(const FaceAlgebra& alg, const CheckOptions& opt) {
    if (!alg.has_antipode())
        throw UnsupportedOperationError("face algebra has no antipode table");
    AxiomReport rep;
    const std::uint64_t dim = alg.dim;
    const int V = alg.objects();
    const bool pair_exhaustive = dim <= 256;

    std::vector<LinComb> face_r(V), face_l(V);
    for (int nu = 0; nu < V; ++nu) {
        face_r[nu] = alg.face_right(nu);
        face_l[nu] = alg.face_left(nu);
    }

    rep.entries.push_back(sweep("S(a)a", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        LinComb lhs;
        for (const CoTerm& t : alg.coproduct[u]) {
            LinComb term = alg.mul(alg.antipode[t.left], singleton(alg, t.right));
            lhs.add_scaled(term, t.coeff);
        }
        LinComb rhs;
        LinComb e = singleton(alg, u);
        for (int nu = 0; nu < V; ++nu) {
            Cyclotomic c = eps(alg, alg.mul(e, face_r[nu]));
            if (!c.is_zero()) rhs.add_scaled(face_r[nu], c);
        }
        if (lhs != rhs) return "at u=" + alg.basis_name(u) + sides(alg, lhs, rhs);
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("aS(a)", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        LinComb lhs;
        for (const CoTerm& t : alg.coproduct[u]) {
            LinComb term = alg.mul(singleton(alg, t.left), alg.antipode[t.right]);
            lhs.add_scaled(term, t.coeff);
        }
        LinComb rhs;
        LinComb e = singleton(alg, u);
        for (int nu = 0; nu < V; ++nu) {
            Cyclotomic c = eps(alg, alg.mul(face_r[nu], e));
            if (!c.is_zero()) rhs.add_scaled(face_l[nu], c);
        }
        if (lhs != rhs) return "at u=" + alg.basis_name(u) + sides(alg, lhs, rhs);
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("S(a)aS(a)", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        LinComb lhs;
        for (const CoTerm& t : alg.coproduct[u])
            for (const CoTerm& s : alg.coproduct[t.right]) {
                LinComb term = alg.mul(alg.antipode[t.left],
                                       alg.mul(singleton(alg, s.left),
                                               alg.antipode[s.right]));
                lhs.add_scaled(term, t.coeff * s.coeff);
            }
        if (lhs != alg.antipode[u])
            return "at u=" + alg.basis_name(u) + sides(alg, lhs, alg.antipode[u]);
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("S(ee)", static_cast<std::uint64_t>(V) * V, [&](std::uint64_t i) -> std::optional<std::string> {
        int lam = static_cast<int>(i / V), mu = static_cast<int>(i % V);
        LinComb got = alg.apply_antipode(alg.eta_of(lam, mu));
        if (got != alg.eta_of(mu, lam))
            return "S(eta(" + alg.object_names[lam] + "," + alg.object_names[mu] +
                   ")) != eta(" + alg.object_names[mu] + "," +
                   alg.object_names[lam] + ")" +
                   sides(alg, got, alg.eta_of(mu, lam));
        return std::nullopt;
    }));

    rep.entries.push_back(sweep_sampled("S-antialg", dim * dim, pair_exhaustive,
                                        opt, [&](std::uint64_t i) -> std::optional<std::string> {
        int u = static_cast<int>(i / dim), v = static_cast<int>(i % dim);
        LinComb lhs = alg.apply_antipode(alg.mul(u, v));
        LinComb rhs = alg.mul(alg.antipode[v], alg.antipode[u]);
        if (lhs != rhs) return two(alg, u, v) + sides(alg, lhs, rhs);
        return std::nullopt;
    }));

    rep.entries.push_back(sweep("S-anticoalg", dim, [&](std::uint64_t ui) -> std::optional<std::string> {
        int u = static_cast<int>(ui);
        PairMap lhs = coproduct_of(alg, alg.antipode[u]);
        PairMap rhs;
        for (const CoTerm& t : alg.coproduct[u])
            for (const auto& [a, ca] : alg.antipode[t.right].terms())
                for (const auto& [b, cb] : alg.antipode[t.left].terms())
                    pm_add(rhs, {a, b}, t.coeff * ca * cb);
        if (lhs != rhs) return "at u=" + alg.basis_name(u) + sides(alg, lhs, rhs);
        return std::nullopt;
    }));

    {
        AxiomEntry e{"S-invertible", true, 1, 0, ""};
        CycMatrix S(alg.dim, alg.dim, alg.conductor);
        for (int u = 0; u < alg.dim; ++u)
            for (const auto& [w, c] : alg.antipode[u].terms()) S.at(w, u) = c;
        if (rank(S) != static_cast<std::size_t>(alg.dim)) {
            e.pass = false;
            e.failures = 1;
            e.first_fail = "antipode matrix is singular";
        }
        rep.entries.push_back(std::move(e));
    }

    return rep;
}

std::vector<LinComb> antipode_inverse(const FaceAlgebra& alg) {
    if (!alg.has_antipode())
        throw UnsupportedOperationError("face algebra has no antipode table");
    CycMatrix S(alg.dim, alg.dim, alg.conductor);
    for (int u = 0; u < alg.dim; ++u)
        for (const auto& [w, c] : alg.antipode[u].terms()) S.at(w, u) = c;
    CycMatrix Si = inverse(S);
    std::vector<LinComb> out(alg.dim);
    for (int u = 0; u < alg.dim; ++u)
        for (int w = 0; w < alg.dim; ++w)
            out[u].add(w, Si.at(w, u));
    return out;
}

FusionRecovery reconstruct_fusion(const FaceAlgebra& alg) {
    int V = alg.objects();
    FusionRecovery out;
    out.recovered.assign(static_cast<std::size_t>(V) * V * V, 0);
    out.matches = true;
    std::vector<Comodule> simples;
    for (int xi = 0; xi < V; ++xi) simples.push_back(simple_comodule(alg, xi));
    for (int xi = 0; xi < V; ++xi)
        for (int eta = 0; eta < V; ++eta) {
            Comodule T = tensor_comodules(alg, simples[xi], simples[eta]);
            for (int zeta = 0; zeta < V; ++zeta) {
                unsigned dim = static_cast<unsigned>(
                    intertwiner_space(alg, simples[zeta], T).size());
                out.recovered[(static_cast<std::size_t>(xi) * V + eta) * V + zeta] = dim;
                if (dim != alg.fiber.face_mult(xi, eta, zeta)) out.matches = false;
            }
        }
    return out;
}

AxiomReport check_reconstruction(const FaceAlgebra& alg, const CheckOptions&) {
    AxiomReport rep;
    int V = alg.objects();

    {
        AxiomEntry e{"dim-formula", true, 1, 0, ""};
        long want = 0;
        for (int xi = 0; xi < V; ++xi) {
            long f = alg.block_size(xi);
            want += f * f;
        }
        if (want != alg.dim) {
            e.pass = false;
            e.failures = 1;
            e.first_fail = "dim " + std::to_string(alg.dim) + " != sum of block squares " +
                           std::to_string(want);
        }
        rep.entries.push_back(std::move(e));
    }

    std::vector<Comodule> simples;
    for (int xi = 0; xi < V; ++xi) simples.push_back(simple_comodule(alg, xi));

    {
        // canonical simples and all pairwise tensor products
        AxiomEntry e{"comodule-axioms", true, 0, 0, ""};
        auto run = [&](const Comodule& M, const std::string& name) {
            ++e.checked;
            std::string bad = check_comodule(alg, M);
            if (!bad.empty()) {
                ++e.failures;
                if (e.failures == 1) e.first_fail = name + ": " + bad;
            }
        };
        for (int xi = 0; xi < V; ++xi) run(simples[xi], "Omega0(" + alg.object_names[xi] + ")");
        for (int xi = 0; xi < V; ++xi)
            for (int eta = 0; eta < V; ++eta)
                run(tensor_comodules(alg, simples[xi], simples[eta]),
                    "Omega0(" + alg.object_names[xi] + ")ox Omega0(" +
                        alg.object_names[eta] + ")");
        e.pass = e.failures == 0;
        rep.entries.push_back(std::move(e));
    }

    rep.entries.push_back(sweep("schur", static_cast<std::uint64_t>(V) * V, [&](std::uint64_t i) -> std::optional<std::string> {
        int xi = static_cast<int>(i / V), eta = static_cast<int>(i % V);
        std::size_t d = intertwiner_space(alg, simples[xi], simples[eta]).size();
        std::size_t want = xi == eta ? 1 : 0;
        if (d != want)
            return "dim Hom(Omega0(" + alg.object_names[xi] + "),Omega0(" +
                   alg.object_names[eta] + ")) = " + std::to_string(d);
        return std::nullopt;
    }));

    {
        AxiomEntry e{"fusion-rules", true, static_cast<std::uint64_t>(V) * V * V, 0, ""};
        FusionRecovery rec = reconstruct_fusion(alg);
        if (!rec.matches) {
            for (int xi = 0; xi < V && e.failures == 0; ++xi)
                for (int eta = 0; eta < V && e.failures == 0; ++eta)
                    for (int zeta = 0; zeta < V && e.failures == 0; ++zeta) {
                        unsigned got = rec.recovered[(static_cast<std::size_t>(xi) * V + eta) * V + zeta];
                        unsigned want = alg.fiber.face_mult(xi, eta, zeta);
                        if (got != want) {
                            ++e.failures;
                            e.first_fail = "N'(" + alg.object_names[xi] + "," +
                                           alg.object_names[eta] + "," +
                                           alg.object_names[zeta] + ") = " +
                                           std::to_string(got) + " != " +
                                           std::to_string(want);
                        }
                    }
            e.pass = false;
            if (e.failures == 0) e.failures = 1;
        }
        rep.entries.push_back(std::move(e));
    }

    if (alg.has_antipode()) {
        rep.entries.push_back(sweep("dual-evaluation", V, [&](std::uint64_t i) -> std::optional<std::string> {
            int xi = static_cast<int>(i);
            const Comodule& M = simples[xi];
            Comodule Mv = dual_comodule(alg, M);
            std::string bad = check_comodule(alg, Mv);
            if (!bad.empty())
                return "Omega0(" + alg.object_names[xi] + ")^dual: " + bad;
            Comodule T = tensor_comodules(alg, Mv, M);
            Comodule U = unit_comodule(alg);
            // ev(m^A ox m_A) = basis vector at the right face of m_A
            CycMatrix phi(U.dim, T.dim, alg.conductor);
            int pairpos = 0;
            for (int A = 0; A < Mv.dim; ++A)
                for (int b = 0; b < M.dim; ++b) {
                    if (Mv.faces[A].second != M.faces[b].first) continue;
                    if (A == b) {
                        int tgt = alg.fiber.position(alg.unit_object,
                                                     Mv.faces[A].first,
                                                     Mv.faces[A].first, 0);
                        phi.at(tgt, pairpos) = alg.one();
                    }
                    ++pairpos;
                }
            if (!is_comodule_map(alg, T, U, phi))
                return "evaluation is not a comodule map for Omega0(" +
                       alg.object_names[xi] + ")";
            return std::nullopt;
        }));
    }

    return rep;
}

AxiomReport check_all(const FaceAlgebra& alg, const CheckOptions& opt) {
    AxiomReport rep = check_face_algebra(alg, opt);
    if (alg.has_antipode()) rep.append(check_antipode(alg, opt));
    rep.append(check_reconstruction(alg, opt));
    return rep;
}

}  // namespace facekit
