#include "facekit/fusion_data.hpp"

#include <sstream>

#include "facekit/errors.hpp"

namespace facekit {

namespace {

std::string quad_name(const FusionData& fd, int a, int b, int c, int d) {
    return "F(" + fd.labels[a] + "," + fd.labels[b] + "," + fd.labels[c] + "," +
           fd.labels[d] + ")";
}

std::string tree_name(const FusionData& fd, const Tree& t) {
    return "(" + fd.labels[t.mid] + "," + std::to_string(t.i) + "," +
           std::to_string(t.j) + ")";
}

}  // namespace

int FBlock::row_pos(const Tree& t) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r] == t) return static_cast<int>(r);
    return -1;
}

int FBlock::col_pos(const Tree& t) const {
    for (std::size_t c = 0; c < cols.size(); ++c)
        if (cols[c] == t) return static_cast<int>(c);
    return -1;
}

int FusionData::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name) return static_cast<int>(i);
    throw UnknownNameError("unknown label '" + name + "'");
}

std::vector<Tree> FusionData::row_trees(int a, int b, int c, int d) const {
    std::vector<Tree> out;
    for (int e = 0; e < count(); ++e)
        for (unsigned i = 0; i < N(a, b, e); ++i)
            for (unsigned j = 0; j < N(e, c, d); ++j)
                out.push_back(Tree{e, i, j});
    return out;
}

std::vector<Tree> FusionData::col_trees(int a, int b, int c, int d) const {
    std::vector<Tree> out;
    for (int f = 0; f < count(); ++f)
        for (unsigned k = 0; k < N(b, c, f); ++k)
            for (unsigned l = 0; l < N(a, f, d); ++l)
                out.push_back(Tree{f, k, l});
    return out;
}

bool FusionData::admissible(int a, int b, int c, int d) const {
    bool row = false, col = false;
    for (int e = 0; e < count() && !row; ++e)
        row = N(a, b, e) > 0 && N(e, c, d) > 0;
    for (int f = 0; f < count() && !col; ++f)
        col = N(b, c, f) > 0 && N(a, f, d) > 0;
    return row && col;
}

const FBlock& FusionData::fblock(int a, int b, int c, int d) const {
    auto it = fmatrices.find({a, b, c, d});
    if (it == fmatrices.end())
        throw ValidationError("missing " + quad_name(*this, a, b, c, d));
    return it->second;
}

Cyclotomic FusionData::f_entry(int a, int b, int c, int d, const Tree& row,
                               const Tree& col) const {
    auto it = fmatrices.find({a, b, c, d});
    if (it == fmatrices.end()) return zero();
    int r = it->second.row_pos(row);
    int cl = it->second.col_pos(col);
    if (r < 0 || cl < 0) return zero();
    return it->second.mat.at(r, cl);
}

Cyclotomic FusionData::finv_entry(int a, int b, int c, int d, const Tree& col,
                                  const Tree& row) const {
    auto it = fmatrices.find({a, b, c, d});
    if (it == fmatrices.end()) return zero();
    int r = it->second.col_pos(col);
    int cl = it->second.row_pos(row);
    if (r < 0 || cl < 0) return zero();
    return it->second.inv.at(r, cl);
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << name << ": " << (ok() ? "pass" : "FAIL") << " (checked=" << checked;
    if (!ok()) os << ", violations=" << issues.size();
    os << ")";
    for (std::size_t i = 0; i < issues.size() && i < 8; ++i)
        os << "\n  " << issues[i].where << ": " << issues[i].what;
    if (issues.size() > 8) os << "\n  ... and " << issues.size() - 8 << " more";
    return os.str();
}

ValidationReport validate_structure(FusionData& fd, bool throwing) {
    ValidationReport rep{"structure", 0, {}};
    auto issue = [&](const std::string& where, const std::string& what) {
        if (throwing) throw ValidationError(where + ": " + what);
        rep.issues.push_back({where, what});
    };
    int V = fd.count();
    for (int a = 0; a < V; ++a) {
        for (int b = 0; b < V; ++b) {
            ++rep.checked;
            unsigned left = fd.N(fd.unit, a, b);
            unsigned right = fd.N(a, fd.unit, b);
            unsigned want = a == b ? 1 : 0;
            if (left != want)
                issue("N(unit," + fd.labels[a] + "," + fd.labels[b] + ")",
                      "expected " + std::to_string(want) + ", got " +
                          std::to_string(left));
            if (right != want)
                issue("N(" + fd.labels[a] + ",unit," + fd.labels[b] + ")",
                      "expected " + std::to_string(want) + ", got " +
                          std::to_string(right));
        }
        if (fd.N(a, fd.dual[a], fd.unit) != 1)
            issue("N(" + fd.labels[a] + ",dual,unit)", "rigidity at unit fails");
        if (fd.N(fd.dual[a], a, fd.unit) != 1)
            issue("N(dual," + fd.labels[a] + ",unit)", "rigidity at unit fails");
    }
    for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b)
            for (int c = 0; c < V; ++c)
                for (int d = 0; d < V; ++d) {
                    if (!fd.admissible(a, b, c, d)) continue;
                    ++rep.checked;
                    auto it = fd.fmatrices.find({a, b, c, d});
                    if (it == fd.fmatrices.end()) {
                        issue(quad_name(fd, a, b, c, d),
                              "missing F-block for admissible quadruple");
                        continue;
                    }
                    FBlock& blk = it->second;
                    auto rt = fd.row_trees(a, b, c, d);
                    auto ct = fd.col_trees(a, b, c, d);
                    if (blk.rows != rt || blk.cols != ct) {
                        issue(quad_name(fd, a, b, c, d),
                              "row/col tree index sets do not match the "
                              "admissible sets in canonical order");
                        continue;
                    }
                    if (rt.size() != ct.size()) {
                        issue(quad_name(fd, a, b, c, d), "F-matrix not square");
                        continue;
                    }
                    try {
                        blk.inv = inverse(blk.mat);
                    } catch (const SingularMatrixError&) {
                        issue(quad_name(fd, a, b, c, d), "F-matrix not invertible");
                        continue;
                    }
                    if (a == fd.unit || b == fd.unit || c == fd.unit) {
                        bool ident = true;
                        for (std::size_t r = 0; r < rt.size() && ident; ++r)
                            for (std::size_t cl = 0; cl < ct.size() && ident; ++cl) {
                                bool want_one = r == cl;
                                const Cyclotomic& x = blk.mat.at(r, cl);
                                if (want_one ? !x.is_one() : !x.is_zero())
                                    ident = false;
                            }
                        if (!ident)
                            issue(quad_name(fd, a, b, c, d),
                                  "unit-normalized gauge violated (expected "
                                  "identity matrix)");
                    }
                }
    return rep;
}

namespace {

// double-coupling tree (x, i; y, j, k): two intermediate labels and three
// multiplicity indices, used for both sides of the pentagon
struct Tree5 {
    int x;
    unsigned i;
    int y;
    unsigned j, k;
};

}  // namespace

ValidationReport validate_pentagon(const FusionData& fd) {
    ValidationReport rep{"pentagon", 0, {}};
    int V = fd.count();
    for (int a = 0; a < V; ++a)
     for (int b = 0; b < V; ++b)
      for (int c = 0; c < V; ++c)
       for (int d = 0; d < V; ++d)
        for (int e = 0; e < V; ++e) {
            std::vector<Tree5> rows;  // basis of Hom(e, ((ab)c)d)
            for (int p = 0; p < V; ++p)
                for (unsigned i = 0; i < fd.N(a, b, p); ++i)
                    for (int q = 0; q < V; ++q)
                        for (unsigned j = 0; j < fd.N(p, c, q); ++j)
                            for (unsigned k = 0; k < fd.N(q, d, e); ++k)
                                rows.push_back({p, i, q, j, k});
            if (rows.empty()) continue;
            std::vector<Tree5> cols;  // basis of Hom(e, a(b(cd)))
            for (int s = 0; s < V; ++s)
                for (unsigned m = 0; m < fd.N(c, d, s); ++m)
                    for (int w = 0; w < V; ++w)
                        for (unsigned n = 0; n < fd.N(b, s, w); ++n)
                            for (unsigned r = 0; r < fd.N(a, w, e); ++r)
                                cols.push_back({s, m, w, n, r});
            for (const Tree5& R : rows) {
                const auto [p, i, q, j, k] = R;
                for (const Tree5& C : cols) {
                    const auto [s, m, w, n, r] = C;
                    ++rep.checked;
                    Cyclotomic lhs = fd.zero();
                    for (unsigned l = 0; l < fd.N(p, s, e); ++l)
                        lhs += fd.f_entry(p, c, d, e, Tree{q, j, k}, Tree{s, m, l}) *
                               fd.f_entry(a, b, s, e, Tree{p, i, l}, Tree{w, n, r});
                    Cyclotomic rhs = fd.zero();
                    for (int t = 0; t < V; ++t)
                        for (unsigned u = 0; u < fd.N(b, c, t); ++u)
                            for (unsigned v = 0; v < fd.N(a, t, q); ++v)
                                for (unsigned y = 0; y < fd.N(t, d, w); ++y)
                                    rhs += fd.f_entry(a, b, c, q, Tree{p, i, j}, Tree{t, u, v}) *
                                           fd.f_entry(a, t, d, e, Tree{q, v, k}, Tree{w, y, r}) *
                                           fd.f_entry(b, c, d, w, Tree{t, u, y}, Tree{s, m, n});
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "(" << fd.labels[a] << "," << fd.labels[b] << ","
                           << fd.labels[c] << "," << fd.labels[d] << ";"
                           << fd.labels[e] << ") row (" << fd.labels[p] << ","
                           << i << ";" << fd.labels[q] << "," << j << "," << k
                           << ") col (" << fd.labels[s] << "," << m << ";"
                           << fd.labels[w] << "," << n << "," << r << ")";
                        rep.issues.push_back(
                            {os.str(), "lhs=" + lhs.str() + " rhs=" + rhs.str()});
                    }
                }
            }
        }
    return rep;
}

ValidationReport validate_duality(const FusionData& fd) {
    ValidationReport rep{"duality", 0, {}};
    int V = fd.count();
    for (int a = 0; a < V; ++a) {
        ++rep.checked;
        int ab = fd.dual[a];
        if (ab < 0 || ab >= V) {
            rep.issues.push_back({"dual(" + fd.labels[a] + ")", "out of range"});
            continue;
        }
        if (fd.N(a, ab, fd.unit) != 1 || fd.N(ab, a, fd.unit) != 1)
            rep.issues.push_back({"dual(" + fd.labels[a] + ")",
                                  "N(a,dual(a),unit) = N(dual(a),a,unit) = 1 fails"});
        int add = fd.dual[ab];
        for (int b = 0; b < V; ++b)
            for (int c = 0; c < V; ++c)
                if (fd.N(a, b, c) != fd.N(add, b, c)) {
                    rep.issues.push_back({"dual(dual(" + fd.labels[a] + "))",
                                          "fusion row differs from " + fd.labels[a]});
                    b = c = V;  // one issue per label is enough
                }
        // zig-zag solvability: the unit-tree F entry must be nonzero
        Cyclotomic pivot = fd.f_entry(a, ab, a, a, Tree{fd.unit, 0, 0},
                                      Tree{fd.unit, 0, 0});
        if (pivot.is_zero())
            rep.issues.push_back({"zigzag(" + fd.labels[a] + ")",
                                  "unit-tree entry of F(a,dual,a,a) is zero"});
    }
    return rep;
}

ValidationReport validate_ring(const FusionData& fd) {
    ValidationReport rep{"fusion-ring", 0, {}};
    int V = fd.count();
    for (int a = 0; a < V; ++a)
        for (int b = 0; b < V; ++b)
            for (int d = 0; d < V; ++d)
                for (int e = 0; e < V; ++e) {
                    ++rep.checked;
                    unsigned long lhs = 0, rhs = 0;
                    for (int c = 0; c < V; ++c) lhs += fd.N(a, b, c) * fd.N(c, d, e);
                    for (int f = 0; f < V; ++f) rhs += fd.N(b, d, f) * fd.N(a, f, e);
                    if (lhs != rhs)
                        rep.issues.push_back(
                            {"assoc(" + fd.labels[a] + "," + fd.labels[b] + "," +
                                 fd.labels[d] + "," + fd.labels[e] + ")",
                             std::to_string(lhs) + " != " + std::to_string(rhs)});
                }
    return rep;
}

std::vector<ValidationReport> validate_all(FusionData& fd) {
    std::vector<ValidationReport> out;
    out.push_back(validate_structure(fd));
    out.push_back(validate_ring(fd));
    out.push_back(validate_duality(fd));
    out.push_back(validate_pentagon(fd));
    return out;
}

}  // namespace facekit
