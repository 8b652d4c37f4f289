#include <doctest.h>

#include "facekit/axioms.hpp"
#include "facekit/catalog.hpp"
#include "facekit/comodule.hpp"
#include "facekit/errors.hpp"

using namespace facekit;

namespace {

const FaceAlgebra& fib_algebra() {
    static FaceAlgebra alg = build_face_algebra(fixture("fibonacci"));
    return alg;
}

const FaceAlgebra& ising_algebra() {
    static FaceAlgebra alg = build_face_algebra(fixture("ising"));
    return alg;
}

}  // namespace

TEST_CASE("axiom suite passes on constructed algebras") {
    CheckOptions full;
    full.level = CheckLevel::Full;
    for (const auto& name : {"vec_z2", "vec_z3_twisted", "fibonacci"}) {
        FaceAlgebra alg = build_face_algebra(builtin(name));
        AxiomReport rep = check_face_algebra(alg, full);
        INFO(name, ": ", report_text(rep));
        CHECK(rep.all_pass());
    }
}

TEST_CASE("antipode suite passes on ising") {
    AxiomReport rep = check_antipode(ising_algebra());
    INFO(report_text(rep));
    CHECK(rep.all_pass());
}

TEST_CASE("product mutation breaks coproduct multiplicativity") {
    FaceAlgebra alg = fib_algebra();
    alg.product[5 * alg.dim + 7].add(3, alg.one());
    AxiomReport rep = check_face_algebra(alg);
    bool dab_failed = false;
    for (const auto& e : rep.entries)
        if (e.axiom == "D(ab)" && !e.pass && !e.first_fail.empty()) dab_failed = true;
    CHECK(dab_failed);
}

TEST_CASE("identity is not an antipode") {
    FaceAlgebra alg = fib_algebra();
    int t = 1;
    int f = alg.block_size(t);
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) {
            int u = alg.index_of(t, i, j);
            LinComb id;
            id.add(u, alg.one());
            alg.antipode[u] = id;
        }
    AxiomReport rep = check_antipode(alg);
    bool saa_failed = false;
    for (const auto& e : rep.entries)
        if (e.axiom == "S(a)a" && !e.pass) saa_failed = true;
    CHECK(saa_failed);
}

TEST_CASE("simple comodules") {
    SUBCASE("unit object gives the diagonal fiber") {
        const FaceAlgebra& alg = ising_algebra();
        Comodule u = unit_comodule(alg);
        CHECK(u.dim == alg.objects());
        for (int k = 0; k < u.dim; ++k) CHECK(u.faces[k].first == u.faces[k].second);
        CHECK(check_comodule(alg, u).empty());
    }
    SUBCASE("vec_z2 nontrivial object") {
        FaceAlgebra alg = build_face_algebra(builtin("vec_z2"));
        Comodule m = simple_comodule(alg, 1);
        CHECK(m.dim == 2);
        CHECK(check_comodule(alg, m).empty());
    }
    SUBCASE("fibonacci tau") {
        const FaceAlgebra& alg = fib_algebra();
        Comodule m = simple_comodule(alg, 1);
        CHECK(m.dim == 3);
        CHECK(check_comodule(alg, m).empty());
    }
}

TEST_CASE("tensor products of comodules") {
    SUBCASE("unit law up to isomorphism") {
        const FaceAlgebra& alg = fib_algebra();
        Comodule m = simple_comodule(alg, 1);
        Comodule t = tensor_comodules(alg, m, unit_comodule(alg));
        CHECK(t.dim == m.dim);
        CHECK(check_comodule(alg, t).empty());
        CHECK(intertwiner_space(alg, m, t).size() == 1);
    }
    SUBCASE("vec_z2 group fusion") {
        FaceAlgebra alg = build_face_algebra(builtin("vec_z2"));
        Comodule m1 = simple_comodule(alg, 1);
        Comodule t = tensor_comodules(alg, m1, m1);
        CHECK(t.dim == 2);
        CHECK(intertwiner_space(alg, simple_comodule(alg, 0), t).size() == 1);
        CHECK(intertwiner_space(alg, m1, t).empty());
    }
    SUBCASE("fibonacci tau ox tau = 1 + tau") {
        const FaceAlgebra& alg = fib_algebra();
        Comodule m = simple_comodule(alg, 1);
        Comodule t = tensor_comodules(alg, m, m);
        CHECK(intertwiner_space(alg, simple_comodule(alg, 0), t).size() == 1);
        CHECK(intertwiner_space(alg, m, t).size() == 1);
    }
}

TEST_CASE("intertwiner spaces transport Schur") {
    const FaceAlgebra& alg = ising_algebra();
    for (int xi = 0; xi < alg.objects(); ++xi)
        for (int eta = 0; eta < alg.objects(); ++eta) {
            auto maps = intertwiner_space(alg, simple_comodule(alg, xi),
                                          simple_comodule(alg, eta));
            CHECK(maps.size() == (xi == eta ? 1u : 0u));
            for (const auto& phi : maps)
                CHECK(is_comodule_map(alg, simple_comodule(alg, xi),
                                      simple_comodule(alg, eta), phi));
        }
    // hom(Omega0(sigma) ox Omega0(sigma), Omega0(1)) has dimension 1
    int sigma = 1;
    Comodule t = tensor_comodules(alg, simple_comodule(alg, sigma),
                                  simple_comodule(alg, sigma));
    CHECK(intertwiner_space(alg, simple_comodule(alg, 0), t).size() == 1);
}

TEST_CASE("fusion rules are recovered") {
    for (const auto& name : {"fibonacci", "ising", "rep_s3", "vec_z3_twisted"}) {
        FaceAlgebra alg = build_face_algebra(builtin(name));
        FusionRecovery rec = reconstruct_fusion(alg);
        INFO(name);
        CHECK(rec.matches);
        const FusionData& fd = *alg.fusion;
        for (int a = 0; a < fd.count(); ++a)
            for (int b = 0; b < fd.count(); ++b)
                for (int c = 0; c < fd.count(); ++c)
                    CHECK(rec.recovered[(static_cast<std::size_t>(a) * fd.count() + b) *
                                            fd.count() + c] == fd.N(a, b, c));
    }
}

TEST_CASE("dual comodules") {
    SUBCASE("requires an antipode") {
        FaceAlgebra alg = init_coalgebra(fixture("fibonacci"));
        build_product(alg);
        Comodule m = simple_comodule(alg, 0);
        CHECK_THROWS_AS(dual_comodule(alg, m), UnsupportedOperationError);
    }
    SUBCASE("self-dual simples") {
        const FaceAlgebra& alg = fib_algebra();
        Comodule unit = unit_comodule(alg);
        CHECK(intertwiner_space(alg, dual_comodule(alg, unit), unit).size() == 1);
        Comodule tau = simple_comodule(alg, 1);
        CHECK(intertwiner_space(alg, dual_comodule(alg, tau), tau).size() == 1);
    }
    SUBCASE("vec_z2 self-dual label") {
        FaceAlgebra alg = build_face_algebra(builtin("vec_z2"));
        Comodule m = simple_comodule(alg, 1);
        CHECK(intertwiner_space(alg, dual_comodule(alg, m), m).size() == 1);
    }
    SUBCASE("dual pairs for vec_z3") {
        FaceAlgebra alg = build_face_algebra(builtin("vec_z3"));
        Comodule m1 = simple_comodule(alg, 1);
        Comodule m2 = simple_comodule(alg, 2);
        CHECK(intertwiner_space(alg, dual_comodule(alg, m1), m2).size() == 1);
        CHECK(intertwiner_space(alg, dual_comodule(alg, m1), m1).empty());
    }
}

TEST_CASE("sampled pairwise sweeps beyond dim 256 are deterministic") {
    // Vec_{Z7} has dim 343, which crosses the exhaustive pairwise budget
    FaceAlgebra alg = build_face_algebra(vec_g(GroupPresentation::cyclic(7)));
    CHECK(alg.dim == 343);
    AxiomReport a = check_face_algebra(alg);
    AxiomReport b = check_face_algebra(alg);
    CHECK(a.all_pass());
    CHECK(report_text(a) == report_text(b));
    for (const auto& e : a.entries)
        if (e.axiom == "D(ab)") CHECK(e.checked == 20000);  // seeded sample
}

TEST_CASE("reconstruction suite end to end") {
    AxiomReport rep = check_reconstruction(fib_algebra());
    INFO(report_text(rep));
    CHECK(rep.all_pass());
    bool has_dim = false;
    for (const auto& e : rep.entries)
        if (e.axiom == "dim-formula") has_dim = true;
    CHECK(has_dim);
}
