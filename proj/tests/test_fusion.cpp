#include <doctest.h>

#include "facekit/catalog.hpp"
#include "facekit/errors.hpp"
#include "facekit/fusion_data.hpp"
#include "facekit/io.hpp"

using namespace facekit;

TEST_CASE("fibonacci fixture loads with the expected shape") {
    FusionData fd = fixture("fibonacci");
    CHECK(fd.count() == 2);
    CHECK(fd.conductor == 5);
    int t = fd.label_index("t");
    CHECK(fd.N(t, t, t) == 1);
    CHECK(fd.N(t, t, fd.unit) == 1);

    const FBlock& blk = fd.fblock(t, t, t, t);
    REQUIRE(blk.rows.size() == 2);
    Cyclotomic phi_inv = Cyclotomic::root_power(5, 1) + Cyclotomic::root_power(5, 4);
    CHECK(blk.mat.at(0, 0) == phi_inv);
    CHECK(blk.mat.at(0, 1) == phi_inv);
    CHECK(blk.mat.at(1, 0).is_one());
    CHECK(blk.mat.at(1, 1) == -phi_inv);
    // golden-ratio relation makes this block an involution
    CHECK(blk.mat * blk.mat == CycMatrix::identity(2, 5));
    CHECK(blk.inv == blk.mat);
}

TEST_CASE("ising fixture carries the 1/sqrt(2) block") {
    FusionData fd = fixture("ising");
    CHECK(fd.conductor == 8);
    int s = fd.label_index("sigma");
    int p = fd.label_index("psi");
    const FBlock& blk = fd.fblock(s, s, s, s);
    // 1/sqrt(2) with sqrt(2) = q + q^7 at conductor 8
    Cyclotomic inv_sqrt2 =
        (Cyclotomic::root_power(8, 1) + Cyclotomic::root_power(8, 7)).inverse();
    REQUIRE(blk.rows.size() == 2);
    CHECK(blk.mat.at(0, 0) == inv_sqrt2);
    CHECK(blk.mat.at(0, 1) == inv_sqrt2);
    CHECK(blk.mat.at(1, 0) == inv_sqrt2);
    CHECK(blk.mat.at(1, 1) == -inv_sqrt2);
    CHECK(fd.fblock(s, p, s, p).mat.at(0, 0) == -fd.one());
    CHECK(fd.fblock(p, s, p, s).mat.at(0, 0) == -fd.one());
}

TEST_CASE("rep_s3 fixture has the character-theory fusion ring") {
    FusionData fd = fixture("rep_s3");
    CHECK(fd.conductor == 1);
    int triv = fd.label_index("triv");
    int sgn = fd.label_index("sgn");
    int std_ = fd.label_index("std");
    CHECK(fd.N(std_, std_, triv) == 1);
    CHECK(fd.N(std_, std_, sgn) == 1);
    CHECK(fd.N(std_, std_, std_) == 1);
    CHECK(fd.N(sgn, sgn, triv) == 1);
    CHECK(fd.N(sgn, sgn, sgn) == 0);
    CHECK(validate_pentagon(fd).ok());
}

TEST_CASE("vec_z2 has group fusion rules") {
    FusionData fd = builtin("vec_z2");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                CHECK(fd.N(a, b, c) == (c == (a + b) % 2 ? 1u : 0u));
}

TEST_CASE("gauge violation is rejected at load") {
    // Vec_Z2 document with F(1,unit,1,1) = [[-1]] breaks the unit gauge
    FusionData fd = builtin("vec_z2");
    nlohmann::json doc = fusion_to_json(fd);
    bool patched = false;
    for (auto& ent : doc["F"]) {
        if (ent["a"] == "1" && ent["b"] == "0" && ent["c"] == "1" &&
            ent["d"] == "0") {
            ent["mat"][0][0] = "-1";
            patched = true;
        }
    }
    REQUIRE(patched);
    CHECK_THROWS_AS(load_fusion(doc), ValidationError);
}

TEST_CASE("missing admissible F block is rejected at load") {
    nlohmann::json doc = fusion_to_json(builtin("vec_z2"));
    nlohmann::json pruned = nlohmann::json::array();
    for (auto& ent : doc["F"])
        if (!(ent["a"] == "1" && ent["b"] == "1" && ent["c"] == "1"))
            pruned.push_back(ent);
    doc["F"] = pruned;
    CHECK_THROWS_AS(load_fusion(doc), ValidationError);
}

TEST_CASE("non-invertible F is rejected at load") {
    nlohmann::json doc = fusion_to_json(fixture("fibonacci"));
    for (auto& ent : doc["F"])
        if (ent["a"] == "t" && ent["b"] == "t" && ent["c"] == "t" && ent["d"] == "t") {
            ent["mat"][0][0] = "1";
            ent["mat"][0][1] = "1";
            ent["mat"][1][0] = "1";
            ent["mat"][1][1] = "1";
        }
    CHECK_THROWS_AS(load_fusion(doc), ValidationError);
}

TEST_CASE("pentagon validator") {
    SUBCASE("vacuously true for Vec_G with trivial cocycle") {
        FusionData fd = builtin("vec_s3");
        ValidationReport rep = validate_pentagon(fd);
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
    }
    SUBCASE("fibonacci gauge satisfies it exactly") {
        FusionData fd = fixture("fibonacci");
        CHECK(validate_pentagon(fd).ok());
    }
    SUBCASE("a single perturbed entry is located") {
        FusionData fd = fixture("fibonacci");
        int t = fd.label_index("t");
        FBlock& blk = fd.fmatrices.at({t, t, t, t});
        blk.mat.at(0, 0) += fd.one();
        ValidationReport rep = validate_pentagon(fd);
        CHECK_FALSE(rep.ok());
        CHECK(rep.issues.front().where.find("(t,t,t,t") != std::string::npos);
    }
}

TEST_CASE("duality validator") {
    SUBCASE("ising fixture passes (sigma and psi self-dual)") {
        FusionData fd = fixture("ising");
        CHECK(validate_duality(fd).ok());
    }
    SUBCASE("vec_z3 duals are group inverses") {
        FusionData fd = builtin("vec_z3");
        CHECK(fd.dual[fd.label_index("1")] == fd.label_index("2"));
        CHECK(validate_duality(fd).ok());
    }
    SUBCASE("declaring dual(t) = unit fails") {
        FusionData fd = fixture("fibonacci");
        fd.dual[fd.label_index("t")] = fd.unit;
        CHECK_FALSE(validate_duality(fd).ok());
    }
}

TEST_CASE("fusion ring associativity screen") {
    for (const auto& name : builtin_names())
        CHECK(validate_ring(builtin(name)).ok());
}

TEST_CASE("stored inverses satisfy F * Finv = identity exactly") {
    for (const auto& name : builtin_names()) {
        FusionData fd = builtin(name);
        for (const auto& [abcd, blk] : fd.fmatrices)
            CHECK(blk.mat * blk.inv ==
                  CycMatrix::identity(blk.rows.size(), fd.conductor));
    }
}

TEST_CASE("tree enumeration order is deterministic") {
    FusionData fd = fixture("ising");
    int s = fd.label_index("sigma");
    auto rows = fd.row_trees(s, s, s, s);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mid == fd.unit);
    CHECK(rows[1].mid == fd.label_index("psi"));
}
