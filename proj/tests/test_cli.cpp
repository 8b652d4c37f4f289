#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "facekit/catalog.hpp"
#include "facekit/io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    fs::path outfile = fs::temp_directory_path() /
                       ("facekit_cli_" + std::to_string(++counter) + ".out");
    std::string cmd = env + (env.empty() ? "" : " ") + FACEKIT_CLI_PATH + " " +
                      args + " > " + outfile.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(outfile);
    std::ostringstream os;
    os << f.rdbuf();
    fs::remove(outfile);
    return {rc == -1 ? -1 : WEXITSTATUS(rc), os.str()};
}

fs::path temp_json(const std::string& stem) {
    return fs::temp_directory_path() / (stem + ".json");
}

fs::path write_builtin(const std::string& name, const std::string& stem) {
    fs::path p = temp_json(stem);
    facekit::write_file(p.string(),
                        facekit::fusion_to_json(facekit::builtin(name)).dump(1));
    return p;
}

}  // namespace

TEST_CASE("cli build reports dim and writes the export") {
    fs::path in = write_builtin("fibonacci", "fib_fd");
    fs::path out = temp_json("fib_alg");
    RunResult r = run_cli("build --input " + in.string() + " --output " + out.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("dim=13") != std::string::npos);
    CHECK(fs::exists(out));

    fs::path z4 = write_builtin("vec_z4", "z4_fd");
    RunResult r4 = run_cli("build --input " + z4.string());
    CHECK(r4.status == 0);
    CHECK(r4.out.find("dim=64") != std::string::npos);
    fs::remove(in);
    fs::remove(out);
    fs::remove(z4);
}

TEST_CASE("cli check exit status and determinism across a round trip") {
    fs::path in = write_builtin("ising", "ising_fd");
    fs::path alg = temp_json("ising_alg");
    REQUIRE(run_cli("build --input " + in.string() + " --output " + alg.string())
                .status == 0);

    RunResult direct = run_cli("check --builtin ising --level fast");
    RunResult imported = run_cli("check --input " + alg.string() + " --level fast");
    CHECK(direct.status == 0);
    CHECK(imported.status == 0);
    CHECK(direct.out == imported.out);  // byte-for-byte identical reports
    CHECK(direct.out.find("ALL PASS") != std::string::npos);

    // identical output regardless of worker thread count
    RunResult one = run_cli("check --builtin ising --level fast",
                            "FACEKIT_THREADS=1");
    RunResult three = run_cli("check --builtin ising --level fast",
                              "FACEKIT_THREADS=3");
    CHECK(one.out == direct.out);
    CHECK(three.out == direct.out);

    // full level adds the exhaustive triple sweeps and still passes
    RunResult full = run_cli("check --builtin fibonacci --level full");
    CHECK(full.status == 0);
    CHECK(full.out.find("checked=2197") != std::string::npos);  // 13^3 triples
    fs::remove(in);
    fs::remove(alg);
}

TEST_CASE("cli check rejects a mutated import") {
    facekit::FaceAlgebra alg =
        facekit::build_face_algebra(facekit::fixture("fibonacci"));
    nlohmann::json doc = facekit::algebra_to_json(alg);
    // bump one product coefficient
    bool patched = false;
    for (auto& row : doc["product"]) {
        if (!row[2].empty() && !patched) {
            row[2][0][1] = "2";
            patched = true;
        }
    }
    REQUIRE(patched);
    fs::path bad = temp_json("fib_bad");
    facekit::write_file(bad.string(), doc.dump());
    RunResult r = run_cli("check --input " + bad.string());
    CHECK(r.status == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("cli build rejects a broken pentagon with a diagnostic") {
    nlohmann::json doc = facekit::fusion_to_json(facekit::fixture("fibonacci"));
    for (auto& ent : doc["F"])
        if (ent["a"] == "t" && ent["b"] == "t" && ent["c"] == "t" && ent["d"] == "t")
            ent["mat"][0][0] = "2";  // invertible but pentagon-inconsistent
    fs::path bad = temp_json("fib_pent");
    facekit::write_file(bad.string(), doc.dump());
    RunResult r = run_cli("build --input " + bad.string());
    CHECK(r.status == 1);
    CHECK(r.out.find("pentagon") != std::string::npos);
    fs::remove(bad);
}

TEST_CASE("cli export emits loadable fusion data") {
    fs::path out = temp_json("rep_s3_fd");
    CHECK(run_cli("export --builtin rep_s3 --output " + out.string()).status == 0);
    facekit::FusionData fd = facekit::load_fusion_file(out.string());
    CHECK(fd.count() == 3);
    fs::remove(out);
}

TEST_CASE("cli example list and oracle-diff") {
    RunResult list = run_cli("example --list");
    CHECK(list.status == 0);
    CHECK(list.out.find("fibonacci") != std::string::npos);
    CHECK(list.out.find("vec_s3") != std::string::npos);

    // check also accepts a fusion-data file directly
    fs::path z3 = write_builtin("vec_z3", "z3_fd_check");
    RunResult fdcheck = run_cli("check --input " + z3.string());
    CHECK(fdcheck.status == 0);
    CHECK(fdcheck.out.find("dim=27") != std::string::npos);
    fs::remove(z3);

    RunResult s3check = run_cli("check --builtin vec_s3 --level fast");
    CHECK(s3check.status == 0);
    CHECK(s3check.out.find("dim=216") != std::string::npos);

    RunResult diff = run_cli("oracle-diff --group z2");
    CHECK(diff.status == 0);
    CHECK(diff.out.find("identical") != std::string::npos);

    RunResult s3 = run_cli("oracle-diff --group s3");
    CHECK(s3.status == 0);
    CHECK(s3.out.find("dim=216") != std::string::npos);
    CHECK(s3.out.find("identical") != std::string::npos);

    RunResult skew = run_cli("oracle-diff --group z2 --skew");
    CHECK(skew.status == 1);

    CHECK(run_cli("check --builtin nope").status == 1);
}
