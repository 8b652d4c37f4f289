#include <doctest.h>

#include "facekit/axioms.hpp"
#include "facekit/catalog.hpp"
#include "facekit/errors.hpp"
#include "facekit/io.hpp"

using namespace facekit;

TEST_CASE("fusion data json round trip") {
    FusionData fd = fixture("fibonacci");
    nlohmann::json doc = fusion_to_json(fd);
    FusionData fd2 = load_fusion(doc);
    CHECK(fd2.labels == fd.labels);
    CHECK(fd2.mult == fd.mult);
    CHECK(fusion_to_json(fd2).dump() == doc.dump());
}

TEST_CASE("algebra export and import agree table for table") {
    for (const auto& name : {"fibonacci", "vec_z3_twisted"}) {
        FaceAlgebra alg = build_face_algebra(builtin(name));
        nlohmann::json doc = algebra_to_json(alg);
        FaceAlgebra back = algebra_from_json(doc);
        INFO(name);
        CHECK(back.dim == alg.dim);
        CHECK(back.unit_object == alg.unit_object);
        CHECK(diff_algebras(alg, back).empty());
        // second generation export is byte-identical
        CHECK(algebra_to_json(back).dump() == doc.dump());
    }
}

TEST_CASE("export schema shape") {
    FaceAlgebra alg = build_face_algebra(fixture("fibonacci"));
    nlohmann::json doc = algebra_to_json(alg);
    CHECK(doc["dim"] == 13);
    REQUIRE(doc["basis"].is_array());
    const auto& b0 = doc["basis"][0];
    CHECK(b0.contains("xi"));
    CHECK(b0["I"].is_array());
    CHECK(b0["I"].size() == 3);
    // omitted rows are zero: only nonzero products are listed
    for (const auto& row : doc["product"]) CHECK(!row[2].empty());
}

TEST_CASE("imported algebra passes the suites") {
    FaceAlgebra alg = build_face_algebra(fixture("fibonacci"));
    FaceAlgebra back = algebra_from_json(algebra_to_json(alg));
    AxiomReport a = check_all(alg);
    AxiomReport b = check_all(back);
    CHECK(b.all_pass());
    CHECK(report_text(a) == report_text(b));
}

TEST_CASE("schema errors carry locations") {
    nlohmann::json doc = fusion_to_json(fixture("fibonacci"));
    SUBCASE("missing key") {
        doc.erase("dual");
        CHECK_THROWS_WITH_AS(load_fusion(doc), "root: missing key 'dual'",
                             SchemaError);
    }
    SUBCASE("duplicate labels") {
        doc["labels"] = {"t", "t"};
        CHECK_THROWS_AS(load_fusion(doc), SchemaError);
    }
    SUBCASE("bad cyclotomic literal") {
        doc["F"][0]["mat"][0][0] = "3q+";
        CHECK_THROWS_AS(load_fusion(doc), ParseError);
    }
    SUBCASE("unknown label in N") {
        doc["N"][0]["a"] = "zz";
        CHECK_THROWS_AS(load_fusion(doc), UnknownNameError);
    }
}

TEST_CASE("report json entries") {
    FaceAlgebra alg = build_face_algebra(builtin("vec_z2"));
    AxiomReport rep = check_face_algebra(alg);
    nlohmann::json doc = report_to_json(rep);
    REQUIRE(doc.is_array());
    REQUIRE(!doc.empty());
    for (const auto& ent : doc) {
        CHECK(ent.contains("axiom"));
        CHECK(ent["status"] == "pass");
        CHECK(ent["checked"].is_number_unsigned());
    }
}
