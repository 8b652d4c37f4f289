#include "facekit/io.hpp"

#include <fstream>
#include <sstream>

#include "facekit/errors.hpp"

namespace facekit {

using nlohmann::json;

namespace {

const json& need(const json& doc, const char* key, const char* where) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw SchemaError(std::string(where) + ": missing key '" + key + "'");
    return *it;
}

long need_long(const json& doc, const char* key, const char* where) {
    const json& v = need(doc, key, where);
    if (!v.is_number_integer())
        throw SchemaError(std::string(where) + ": '" + key + "' must be an integer");
    return v.get<long>();
}

Tree tree_from_json(const FusionData& fd, const json& t, const char* where) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() ||
        !t[1].is_number_integer() || !t[2].is_number_integer())
        throw SchemaError(std::string(where) +
                          ": tree must be [label, int, int]");
    return Tree{fd.label_index(t[0].get<std::string>()),
                t[1].get<unsigned>(), t[2].get<unsigned>()};
}

}  // namespace

FusionData load_fusion(const json& doc) {
    if (!doc.is_object()) throw SchemaError("document root must be an object");
    FusionData fd;
    fd.conductor = need_long(doc, "conductor", "root");
    if (fd.conductor < 1) throw SchemaError("conductor must be positive");

    const json& labels = need(doc, "labels", "root");
    if (!labels.is_array() || labels.empty())
        throw SchemaError("labels must be a non-empty array");
    for (const auto& l : labels) {
        if (!l.is_string()) throw SchemaError("labels must be strings");
        fd.labels.push_back(l.get<std::string>());
    }
    for (std::size_t i = 0; i < fd.labels.size(); ++i)
        for (std::size_t j = i + 1; j < fd.labels.size(); ++j)
            if (fd.labels[i] == fd.labels[j])
                throw SchemaError("duplicate label '" + fd.labels[i] + "'");

    const json& unit = need(doc, "unit", "root");
    if (!unit.is_string()) throw SchemaError("unit must be a label string");
    fd.unit = fd.label_index(unit.get<std::string>());

    const json& dual = need(doc, "dual", "root");
    if (!dual.is_object()) throw SchemaError("dual must be an object");
    fd.dual.assign(fd.count(), -1);
    for (const auto& [k, v] : dual.items()) {
        if (!v.is_string()) throw SchemaError("dual values must be label strings");
        fd.dual[fd.label_index(k)] = fd.label_index(v.get<std::string>());
    }
    for (int a = 0; a < fd.count(); ++a)
        if (fd.dual[a] < 0)
            throw SchemaError("dual missing for label '" + fd.labels[a] + "'");

    fd.mult.assign(static_cast<std::size_t>(fd.count()) * fd.count() * fd.count(), 0);
    const json& N = need(doc, "N", "root");
    if (!N.is_array()) throw SchemaError("N must be an array");
    for (const auto& ent : N) {
        if (!ent.is_object()) throw SchemaError("N entries must be objects");
        int a = fd.label_index(need(ent, "a", "N entry").get<std::string>());
        int b = fd.label_index(need(ent, "b", "N entry").get<std::string>());
        int c = fd.label_index(need(ent, "c", "N entry").get<std::string>());
        long m = need_long(ent, "m", "N entry");
        if (m < 0) throw SchemaError("N multiplicities must be nonnegative");
        fd.N_ref(a, b, c) = static_cast<unsigned>(m);
    }

    const json& F = need(doc, "F", "root");
    if (!F.is_array()) throw SchemaError("F must be an array");
    for (const auto& ent : F) {
        if (!ent.is_object()) throw SchemaError("F entries must be objects");
        FBlock blk;
        int a = fd.label_index(need(ent, "a", "F entry").get<std::string>());
        int b = fd.label_index(need(ent, "b", "F entry").get<std::string>());
        int c = fd.label_index(need(ent, "c", "F entry").get<std::string>());
        int d = fd.label_index(need(ent, "d", "F entry").get<std::string>());
        blk.abcd = {a, b, c, d};
        std::string where = "F(" + fd.labels[a] + "," + fd.labels[b] + "," +
                            fd.labels[c] + "," + fd.labels[d] + ")";
        const json& rows = need(ent, "rows", where.c_str());
        const json& cols = need(ent, "cols", where.c_str());
        const json& mat = need(ent, "mat", where.c_str());
        if (!rows.is_array() || !cols.is_array() || !mat.is_array())
            throw SchemaError(where + ": rows/cols/mat must be arrays");
        for (const auto& t : rows) blk.rows.push_back(tree_from_json(fd, t, where.c_str()));
        for (const auto& t : cols) blk.cols.push_back(tree_from_json(fd, t, where.c_str()));
        blk.mat = CycMatrix(blk.rows.size(), blk.cols.size(), fd.conductor);
        if (mat.size() != blk.rows.size())
            throw SchemaError(where + ": mat has wrong row count");
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
            const json& row = mat[r];
            if (!row.is_array() || row.size() != blk.cols.size())
                throw SchemaError(where + ": mat row " + std::to_string(r) +
                                  " has wrong length");
            for (std::size_t cI = 0; cI < blk.cols.size(); ++cI) {
                if (!row[cI].is_string())
                    throw SchemaError(where + ": entries must be cyclotomic "
                                              "literal strings");
                blk.mat.at(r, cI) =
                    Cyclotomic::parse(row[cI].get<std::string>(), fd.conductor);
            }
        }
        if (fd.fmatrices.count(blk.abcd))
            throw SchemaError(where + ": duplicate F-block");
        fd.fmatrices.emplace(blk.abcd, std::move(blk));
    }

    validate_structure(fd, /*throwing=*/true);
    return fd;
}

FusionData load_fusion_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& ex) {
        throw SchemaError(std::string("JSON parse error: ") + ex.what());
    }
    return load_fusion(doc);
}

FusionData load_fusion_file(const std::string& path) {
    return load_fusion_text(read_file(path));
}

json fusion_to_json(const FusionData& fd) {
    json doc;
    doc["conductor"] = fd.conductor;
    doc["labels"] = fd.labels;
    doc["unit"] = fd.labels[fd.unit];
    json dual = json::object();
    for (int a = 0; a < fd.count(); ++a)
        dual[fd.labels[a]] = fd.labels[fd.dual[a]];
    doc["dual"] = dual;
    json N = json::array();
    for (int a = 0; a < fd.count(); ++a)
        for (int b = 0; b < fd.count(); ++b)
            for (int c = 0; c < fd.count(); ++c)
                if (fd.N(a, b, c))
                    N.push_back({{"a", fd.labels[a]},
                                 {"b", fd.labels[b]},
                                 {"c", fd.labels[c]},
                                 {"m", fd.N(a, b, c)}});
    doc["N"] = N;
    json F = json::array();
    for (const auto& [abcd, blk] : fd.fmatrices) {
        json ent;
        ent["a"] = fd.labels[abcd[0]];
        ent["b"] = fd.labels[abcd[1]];
        ent["c"] = fd.labels[abcd[2]];
        ent["d"] = fd.labels[abcd[3]];
        json rows = json::array(), cols = json::array(), mat = json::array();
        for (const Tree& t : blk.rows)
            rows.push_back({fd.labels[t.mid], t.i, t.j});
        for (const Tree& t : blk.cols)
            cols.push_back({fd.labels[t.mid], t.i, t.j});
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < blk.cols.size(); ++c)
                row.push_back(blk.mat.at(r, c).str());
            mat.push_back(row);
        }
        ent["rows"] = rows;
        ent["cols"] = cols;
        ent["mat"] = mat;
        F.push_back(ent);
    }
    doc["F"] = F;
    return doc;
}

json algebra_to_json(const FaceAlgebra& alg) {
    json doc;
    doc["dim"] = alg.dim;
    doc["conductor"] = alg.conductor;
    json basis = json::array();
    for (int u = 0; u < alg.dim; ++u) {
        FaceAlgebra::BasisId b = alg.split(u);
        const FiberVector& I = alg.fiber.fiber(b.object)[b.ipos];
        const FiberVector& J = alg.fiber.fiber(b.object)[b.jpos];
        basis.push_back(
            {{"xi", alg.object_names[b.object]},
             {"I", {alg.object_names[I.left], alg.object_names[I.right], I.mult}},
             {"J", {alg.object_names[J.left], alg.object_names[J.right], J.mult}}});
    }
    doc["basis"] = basis;

    json product = json::array();
    for (int u = 0; u < alg.dim; ++u)
        for (int v = 0; v < alg.dim; ++v) {
            const LinComb& p = alg.mul(u, v);
            if (p.empty()) continue;
            json terms = json::array();
            for (const auto& [k, c] : p.terms()) terms.push_back({k, c.str()});
            product.push_back({u, v, terms});
        }
    doc["product"] = product;

    json coproduct = json::array();
    for (int u = 0; u < alg.dim; ++u) {
        json terms = json::array();
        for (const CoTerm& t : alg.coproduct[u])
            terms.push_back({t.left, t.right, t.coeff.str()});
        coproduct.push_back({u, terms});
    }
    doc["coproduct"] = coproduct;

    json counit = json::array();
    for (int u = 0; u < alg.dim; ++u)
        if (!alg.counit[u].is_zero()) counit.push_back({u, alg.counit[u].str()});
    doc["counit"] = counit;

    json unit = json::array();
    for (const auto& [k, c] : alg.unit_element.terms()) unit.push_back({k, c.str()});
    doc["unit"] = unit;

    if (alg.has_antipode()) {
        json antipode = json::array();
        for (int u = 0; u < alg.dim; ++u) {
            json terms = json::array();
            for (const auto& [k, c] : alg.antipode[u].terms())
                terms.push_back({k, c.str()});
            antipode.push_back({u, terms});
        }
        doc["antipode"] = antipode;
    }

    json eta = json::array();
    int V = alg.objects();
    for (int lam = 0; lam < V; ++lam)
        for (int mu = 0; mu < V; ++mu) {
            json terms = json::array();
            for (const auto& [k, c] : alg.eta_of(lam, mu).terms())
                terms.push_back({k, c.str()});
            eta.push_back({{alg.object_names[lam], alg.object_names[mu]}, terms});
        }
    doc["eta"] = eta;
    return doc;
}

FaceAlgebra algebra_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("document root must be an object");
    FaceAlgebra alg;
    alg.conductor = need_long(doc, "conductor", "root");
    long dim = need_long(doc, "dim", "root");

    const json& basis = need(doc, "basis", "root");
    if (!basis.is_array() || static_cast<long>(basis.size()) != dim)
        throw SchemaError("basis must be an array of length dim");

    // recover object list in first-appearance order
    for (const auto& ent : basis) {
        std::string xi = need(ent, "xi", "basis entry").get<std::string>();
        bool seen = false;
        for (const auto& n : alg.object_names) seen = seen || n == xi;
        if (!seen) alg.object_names.push_back(xi);
    }
    auto label_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < alg.object_names.size(); ++i)
            if (alg.object_names[i] == name) return static_cast<int>(i);
        throw SchemaError("unknown label '" + name + "' in basis");
    };

    auto fv_from = [&](const json& arr, int obj, const char* where) {
        if (!arr.is_array() || arr.size() != 3 || !arr[0].is_string() ||
            !arr[1].is_string() || !arr[2].is_number_integer())
            throw SchemaError(std::string(where) +
                              ": fiber vector must be [label, label, int]");
        return FiberVector{obj, label_index(arr[0].get<std::string>()),
                           label_index(arr[1].get<std::string>()),
                           arr[2].get<unsigned>()};
    };

    // block structure: contiguous runs of equal xi, square block sizes,
    // basis laid out I-major over the fiber list read off the J column
    alg.fiber.fibers.resize(alg.object_names.size());
    alg.block_offset.assign(alg.object_names.size(), 0);
    std::vector<bool> seen(alg.object_names.size(), false);
    std::size_t at = 0;
    while (at < basis.size()) {
        int obj = label_index(need(basis[at], "xi", "basis entry").get<std::string>());
        if (seen[obj]) throw SchemaError("basis block for '" +
                                         alg.object_names[obj] + "' is not contiguous");
        seen[obj] = true;
        std::size_t len = 0;
        while (at + len < basis.size() &&
               label_index(need(basis[at + len], "xi", "basis").get<std::string>()) == obj)
            ++len;
        std::size_t f = 0;
        while (f * f < len) ++f;
        if (f * f != len)
            throw SchemaError("basis block for '" + alg.object_names[obj] +
                              "' is not a square matrix block");
        alg.block_offset[obj] = static_cast<int>(at);
        auto& fib = alg.fiber.fibers[obj];
        for (std::size_t j = 0; j < f; ++j)
            fib.push_back(fv_from(need(basis[at + j], "J", "basis"), obj, "basis"));
        // consistency of the full block layout
        for (std::size_t k = 0; k < len; ++k) {
            FiberVector I = fv_from(need(basis[at + k], "I", "basis"), obj, "basis");
            FiberVector J = fv_from(need(basis[at + k], "J", "basis"), obj, "basis");
            if (!(I == fib[k / f]) || !(J == fib[k % f]))
                throw SchemaError("basis block for '" + alg.object_names[obj] +
                                  "' is not in canonical I-major order");
        }
        at += len;
    }
    alg.dim = static_cast<int>(dim);

    auto basis_index = [&](const json& v, const char* where) {
        if (!v.is_number_integer())
            throw SchemaError(std::string(where) + ": index must be an integer");
        long k = v.get<long>();
        if (k < 0 || k >= dim)
            throw SchemaError(std::string(where) + ": index out of range");
        return static_cast<int>(k);
    };

    // tables
    alg.product.assign(static_cast<std::size_t>(dim) * dim, LinComb());
    const json& product = need(doc, "product", "root");
    for (const auto& row : product) {
        if (!row.is_array() || row.size() != 3)
            throw SchemaError("product rows must be [i, j, terms]");
        long u = basis_index(row[0], "product");
        long v = basis_index(row[1], "product");
        LinComb lc;
        for (const auto& t : row[2])
            lc.add(basis_index(t[0], "product term"),
                   Cyclotomic::parse(t[1].get<std::string>(), alg.conductor));
        alg.product[static_cast<std::size_t>(u) * dim + v] = std::move(lc);
    }

    alg.coproduct.assign(dim, {});
    const json& coproduct = need(doc, "coproduct", "root");
    for (const auto& row : coproduct) {
        int u = basis_index(row[0], "coproduct");
        for (const auto& t : row[1])
            alg.coproduct[u].push_back(
                CoTerm{basis_index(t[0], "coproduct term"),
                       basis_index(t[1], "coproduct term"),
                       Cyclotomic::parse(t[2].get<std::string>(), alg.conductor)});
    }

    alg.counit.assign(dim, alg.zero());
    for (const auto& row : need(doc, "counit", "root")) {
        int u = basis_index(row[0], "counit");
        alg.counit[u] = Cyclotomic::parse(row[1].get<std::string>(), alg.conductor);
    }

    for (const auto& t : need(doc, "unit", "root"))
        alg.unit_element.add(basis_index(t[0], "unit"),
                             Cyclotomic::parse(t[1].get<std::string>(), alg.conductor));

    if (doc.contains("antipode")) {
        alg.antipode.assign(dim, LinComb());
        for (const auto& row : doc["antipode"]) {
            int u = basis_index(row[0], "antipode");
            for (const auto& t : row[1])
                alg.antipode[u].add(
                    basis_index(t[0], "antipode term"),
                    Cyclotomic::parse(t[1].get<std::string>(), alg.conductor));
        }
    }

    int V = alg.objects();
    alg.eta.assign(static_cast<std::size_t>(V) * V, LinComb());
    const json& eta = need(doc, "eta", "root");
    for (const auto& row : eta) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_array() ||
            row[0].size() != 2)
            throw SchemaError("eta rows must be [[a,b], terms]");
        int lam = label_index(row[0][0].get<std::string>());
        int mu = label_index(row[0][1].get<std::string>());
        LinComb lc;
        for (const auto& t : row[1])
            lc.add(basis_index(t[0], "eta term"),
                   Cyclotomic::parse(t[1].get<std::string>(), alg.conductor));
        alg.eta[static_cast<std::size_t>(lam) * V + mu] = std::move(lc);
    }

    // unit object: the block the eta images live in
    bool have_unit = false;
    for (int lam = 0; lam < V && !have_unit; ++lam)
        for (int mu = 0; mu < V && !have_unit; ++mu)
            for (const auto& [k, c] : alg.eta_of(lam, mu).terms()) {
                alg.unit_object = alg.split(k).object;
                have_unit = true;
                break;
            }
    if (!have_unit) throw SchemaError("eta table is empty");
    return alg;
}

FaceAlgebra algebra_from_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& ex) {
        throw SchemaError(std::string("JSON parse error: ") + ex.what());
    }
    return algebra_from_json(doc);
}

json report_to_json(const AxiomReport& rep) {
    json out = json::array();
    for (const AxiomEntry& e : rep.entries) {
        json ent;
        ent["axiom"] = e.axiom;
        ent["status"] = e.pass ? "pass" : "fail";
        ent["checked"] = e.checked;
        if (!e.pass) {
            ent["failures"] = e.failures;
            ent["first"] = e.first_fail;
        }
        out.push_back(ent);
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw Error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace facekit
