#include "facekit/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "facekit/errors.hpp"
#include "facekit/io.hpp"

namespace facekit {

namespace fixtures {
extern const char* k_fibonacci;
extern const char* k_ising;
extern const char* k_rep_s3;
}  // namespace fixtures

FusionData vec_g(const GroupPresentation& g, const Cocycle3* omega) {
    int n = g.order();
    FusionData fd;
    fd.conductor = omega ? omega->conductor : 1;
    fd.labels = g.elems;
    fd.unit = g.identity;
    fd.dual = g.inverse;
    fd.mult.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) fd.N_ref(a, b, g.mul(a, b)) = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = g.mul(a, b), bc = g.mul(b, c);
                int d = g.mul(ab, c);
                FBlock blk;
                blk.abcd = {a, b, c, d};
                blk.rows = {Tree{ab, 0, 0}};
                blk.cols = {Tree{bc, 0, 0}};
                blk.mat = CycMatrix(1, 1, fd.conductor);
                blk.mat.at(0, 0) = omega ? omega->omega(a, b, c) : fd.one();
                fd.fmatrices.emplace(blk.abcd, std::move(blk));
            }
    validate_structure(fd, /*throwing=*/true);
    for (const auto& rep : {validate_ring(fd), validate_duality(fd),
                            validate_pentagon(fd)})
        if (!rep.ok()) throw ValidationError("vec_g: " + rep.summary());
    return fd;
}

FaceAlgebra group_oracle(const GroupPresentation& g) {
    int n = g.order();
    FaceAlgebra alg;
    alg.conductor = 1;
    alg.object_names = g.elems;
    alg.unit_object = g.identity;
    alg.fiber.fibers.resize(n);
    for (int gg = 0; gg < n; ++gg)
        for (int a = 0; a < n; ++a)
            alg.fiber.fibers[gg].push_back(FiberVector{gg, a, g.mul(a, gg), 0});
    alg.block_offset.resize(n);
    alg.dim = n * n * n;
    for (int gg = 0; gg < n; ++gg) alg.block_offset[gg] = gg * n * n;

    // dictionary: e^a_b[g] at block g, I position a, J position b
    auto E = [&](int a, int b, int gg) { return alg.index_of(gg, a, b); };

    alg.product.assign(static_cast<std::size_t>(alg.dim) * alg.dim, LinComb());
    alg.coproduct.resize(alg.dim);
    alg.counit.assign(alg.dim, alg.zero());
    alg.antipode.assign(alg.dim, LinComb());
    for (int gg = 0; gg < n; ++gg)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int u = E(a, b, gg);
                for (int c = 0; c < n; ++c)
                    alg.coproduct[u].push_back(
                        CoTerm{E(a, c, gg), E(c, b, gg), alg.one()});
                if (a == b) alg.counit[u] = alg.one();
                alg.antipode[u].add(E(g.mul(b, gg), g.mul(a, gg), g.inverse[gg]),
                                    alg.one());
                // e^a_b[g] e^c_d[h] = delta_{ag,c} delta_{bg,d} e^a_b[gh]
                for (int hh = 0; hh < n; ++hh)
                    alg.product[static_cast<std::size_t>(u) * alg.dim +
                                E(g.mul(a, gg), g.mul(b, gg), hh)]
                        .add(E(a, b, g.mul(gg, hh)), alg.one());
            }

    alg.eta.assign(static_cast<std::size_t>(n) * n, LinComb());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            alg.eta[static_cast<std::size_t>(a) * n + b].add(E(a, b, g.identity),
                                                             alg.one());
            alg.unit_element.add(E(a, b, g.identity), alg.one());
        }
    alg.cup_scale.assign(n, alg.one());
    return alg;
}

FusionData fixture(const std::string& name) {
    FusionData fd;
    if (name == "fibonacci") {
        fd = load_fusion_text(fixtures::k_fibonacci);
    } else if (name == "ising") {
        fd = load_fusion_text(fixtures::k_ising);
    } else if (name == "rep_s3") {
        fd = load_fusion_text(fixtures::k_rep_s3);
    } else if (name == "vec_z3_twisted") {
        GroupPresentation z3 = GroupPresentation::cyclic(3);
        Cocycle3 tw = Cocycle3::cyclic_twist(z3);
        return vec_g(z3, &tw);  // validated inside vec_g
    } else {
        throw UnknownNameError("unknown fixture '" + name + "'");
    }
    for (const auto& rep : {validate_ring(fd), validate_duality(fd),
                            validate_pentagon(fd)})
        if (!rep.ok())
            throw ValidationError("fixture " + name + ": " + rep.summary());
    return fd;
}

std::vector<std::string> builtin_names() {
    return {"fibonacci", "ising",  "rep_s3", "vec_z3_twisted",
            "vec_z2",    "vec_z3", "vec_z4", "vec_s3"};
}

bool is_builtin(const std::string& name) {
    auto names = builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FusionData builtin(const std::string& name) {
    if (name == "vec_z2") return vec_g(GroupPresentation::cyclic(2));
    if (name == "vec_z3") return vec_g(GroupPresentation::cyclic(3));
    if (name == "vec_z4") return vec_g(GroupPresentation::cyclic(4));
    if (name == "vec_s3") return vec_g(GroupPresentation::symmetric3());
    return fixture(name);
}

GroupPresentation named_group(const std::string& name) {
    if (name == "z2") return GroupPresentation::cyclic(2);
    if (name == "z3") return GroupPresentation::cyclic(3);
    if (name == "z4") return GroupPresentation::cyclic(4);
    if (name == "s3") return GroupPresentation::symmetric3();
    throw UnknownNameError("unknown group '" + name + "' (want z2|z3|z4|s3)");
}

namespace {

std::string lc_str(const FaceAlgebra& alg, const LinComb& lc) {
    if (lc.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : lc.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << alg.basis_name(k);
    }
    return os.str();
}

}  // namespace

std::vector<std::string> diff_algebras(const FaceAlgebra& a, const FaceAlgebra& b,
                                       std::size_t limit) {
    std::vector<std::string> out;
    std::size_t extra = 0;
    auto note = [&](const std::string& s) {
        if (out.size() < limit) out.push_back(s);
        else ++extra;
    };
    if (a.object_names != b.object_names || a.unit_object != b.unit_object) {
        note("object lists differ");
        return out;
    }
    if (a.dim != b.dim) {
        note("dim " + std::to_string(a.dim) + " != " + std::to_string(b.dim));
        return out;
    }
    if (a.fiber.fibers != b.fiber.fibers) {
        note("fiber bases differ");
        return out;
    }
    for (int u = 0; u < a.dim; ++u)
        for (int v = 0; v < a.dim; ++v)
            if (a.mul(u, v) != b.mul(u, v))
                note("product " + a.basis_name(u) + " * " + a.basis_name(v) +
                     ": " + lc_str(a, a.mul(u, v)) + " vs " + lc_str(b, b.mul(u, v)));
    for (int u = 0; u < a.dim; ++u)
        if (a.coproduct[u] != b.coproduct[u])
            note("coproduct at " + a.basis_name(u));
    for (int u = 0; u < a.dim; ++u)
        if (a.counit[u] != b.counit[u])
            note("counit at " + a.basis_name(u) + ": " + a.counit[u].str() +
                 " vs " + b.counit[u].str());
    if (a.unit_element != b.unit_element) note("unit element differs");
    for (int lam = 0; lam < a.objects(); ++lam)
        for (int mu = 0; mu < a.objects(); ++mu)
            if (a.eta_of(lam, mu) != b.eta_of(lam, mu))
                note("eta(" + a.object_names[lam] + "," + a.object_names[mu] + ")");
    if (a.has_antipode() != b.has_antipode()) {
        note("antipode presence differs");
    } else if (a.has_antipode()) {
        for (int u = 0; u < a.dim; ++u)
            if (a.antipode[u] != b.antipode[u])
                note("antipode at " + a.basis_name(u) + ": " +
                     lc_str(a, a.antipode[u]) + " vs " + lc_str(b, b.antipode[u]));
    }
    if (extra) out.push_back("... and " + std::to_string(extra) + " more mismatches");
    return out;
}

FaceAlgebra transpose_blocks(const FaceAlgebra& alg) {
    FaceAlgebra out = alg;
    std::vector<int> perm(alg.dim);
    for (int u = 0; u < alg.dim; ++u) {
        FaceAlgebra::BasisId b = alg.split(u);
        perm[u] = alg.index_of(b.object, b.jpos, b.ipos);
    }
    auto map_lc = [&](const LinComb& lc) {
        LinComb r;
        for (const auto& [k, c] : lc.terms()) r.add(perm[k], c);
        return r;
    };
    for (int u = 0; u < alg.dim; ++u)
        for (int v = 0; v < alg.dim; ++v)
            out.product[static_cast<std::size_t>(perm[u]) * alg.dim + perm[v]] =
                map_lc(alg.mul(u, v));
    for (int u = 0; u < alg.dim; ++u) {
        std::vector<CoTerm> ct;
        for (const CoTerm& t : alg.coproduct[u])
            ct.push_back(CoTerm{perm[t.left], perm[t.right], t.coeff});
        out.coproduct[perm[u]] = std::move(ct);
        out.counit[perm[u]] = alg.counit[u];
        if (alg.has_antipode()) out.antipode[perm[u]] = map_lc(alg.antipode[u]);
    }
    out.unit_element = map_lc(alg.unit_element);
    for (std::size_t i = 0; i < alg.eta.size(); ++i) out.eta[i] = map_lc(alg.eta[i]);
    return out;
}

}  // namespace facekit
