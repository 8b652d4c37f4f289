// facekit: build, check and export canonical face algebras from fusion data.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "facekit/axioms.hpp"
#include "facekit/catalog.hpp"
#include "facekit/errors.hpp"
#include "facekit/io.hpp"

namespace {

using namespace facekit;

std::string block_summary(const FaceAlgebra& alg) {
    std::ostringstream os;
    os << "dim=" << alg.dim << " conductor=" << alg.conductor << " blocks=[";
    for (int xi = 0; xi < alg.objects(); ++xi) {
        if (xi) os << ",";
        os << alg.object_names[xi] << ":" << alg.block_size(xi);
    }
    os << "]";
    return os.str();
}

int cmd_build(const std::string& input, const std::string& output) {
    FusionData fd = load_fusion_file(input);
    for (const auto& rep : validate_all(fd)) {
        std::cout << rep.summary() << "\n";
        if (!rep.ok()) return 1;
    }
    FaceAlgebra alg = build_face_algebra(fd);
    std::cout << block_summary(alg) << "\n";
    if (!output.empty())
        write_file(output, algebra_to_json(alg).dump(1) + "\n");
    return 0;
}

int cmd_check(const std::string& input, const std::string& builtinName,
              const std::string& level, const std::string& output) {
    CheckOptions opt;
    opt.level = level == "full" ? CheckLevel::Full : CheckLevel::Fast;

    FaceAlgebra alg;
    if (!builtinName.empty()) {
        FusionData fd = builtin(builtinName);
        for (const auto& rep : validate_all(fd))
            if (!rep.ok()) {
                std::cerr << rep.summary() << "\n";
                return 1;
            }
        alg = build_face_algebra(fd);
    } else {
        // sniff the schema: fusion data carries "labels", an export "basis"
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(input));
        } catch (const nlohmann::json::exception& ex) {
            throw SchemaError(std::string("JSON parse error: ") + ex.what());
        }
        if (doc.contains("basis")) {
            alg = algebra_from_json(doc);
        } else {
            FusionData fd = load_fusion(doc);
            for (const auto& rep : validate_all(fd))
                if (!rep.ok()) {
                    std::cerr << rep.summary() << "\n";
                    return 1;
                }
            alg = build_face_algebra(fd);
        }
    }
    AxiomReport rep = check_all(alg, opt);
    std::cout << block_summary(alg) << "\n" << report_text(rep);
    if (!output.empty()) write_file(output, report_to_json(rep).dump(1) + "\n");
    return rep.all_pass() ? 0 : 1;
}

int cmd_export(const std::string& builtinName, const std::string& output) {
    FusionData fd = builtin(builtinName);
    std::string text = fusion_to_json(fd).dump(1) + "\n";
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
    return 0;
}

int cmd_example(bool list, const std::string& name, const std::string& level) {
    if (list) {
        for (const auto& n : builtin_names()) std::cout << n << "\n";
        return 0;
    }
    std::cout << "example " << name << "\n";
    return cmd_check("", name, level, "");
}

int cmd_oracle_diff(const std::string& groupName, bool skew) {
    GroupPresentation g = named_group(groupName);
    FaceAlgebra built = build_face_algebra(vec_g(g));
    FaceAlgebra oracle = group_oracle(g);
    if (skew) oracle = transpose_blocks(oracle);
    auto diffs = diff_algebras(built, oracle);
    std::cout << "oracle-diff group=" << groupName << " dim=" << built.dim
              << (skew ? " (skewed dictionary)" : "") << "\n";
    if (diffs.empty()) {
        std::cout << "identical\n";
        return 0;
    }
    for (const auto& d : diffs) std::cout << d << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical face-algebra construction and verification"};
    app.require_subcommand(1);

    std::string input, builtinName, output, level = "fast", group, name;
    bool list = false, skew = false;

    CLI::App* build = app.add_subcommand("build",
        "construct the face algebra and export structure constants");
    build->add_option("--input", input, "fusion-data JSON file")->required();
    build->add_option("--output", output, "structure-constant JSON output");

    CLI::App* check = app.add_subcommand("check",
        "run the axiom and reconstruction suites");
    auto* in = check->add_option("--input", input,
                                 "fusion-data or structure-constant JSON file");
    auto* bi = check->add_option("--builtin", builtinName, "builtin name");
    in->excludes(bi);
    bi->excludes(in);
    check->add_option("--level", level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));
    check->add_option("--output", output, "machine-readable report JSON");

    CLI::App* exp = app.add_subcommand("export", "write a builtin fusion-data file");
    exp->add_option("--builtin", builtinName, "builtin name")->required();
    exp->add_option("--output", output, "output path (stdout when omitted)");

    CLI::App* example = app.add_subcommand("example", "run a catalog example");
    example->add_flag("--list", list, "list builtin names");
    example->add_option("--name", name, "builtin name");
    example->add_option("--level", level, "fast|full")
        ->check(CLI::IsMember({"fast", "full"}));

    CLI::App* odiff = app.add_subcommand("oracle-diff",
        "compare the coend construction against the group closed forms");
    odiff->add_option("--group", group, "z2|z3|z4|s3")->required();
    odiff->add_flag("--skew", skew,
                    "negative control: deliberately transposed dictionary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(input, output);
        if (check->parsed()) {
            if (input.empty() && builtinName.empty())
                throw Error("check needs --input or --builtin");
            return cmd_check(input, builtinName, level, output);
        }
        if (exp->parsed()) return cmd_export(builtinName, output);
        if (example->parsed()) {
            if (!list && name.empty())
                throw Error("example needs --list or --name");
            return cmd_example(list, name, level);
        }
        if (odiff->parsed()) return cmd_oracle_diff(group, skew);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
