#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "facekit/linalg.hpp"

namespace facekit {

/// Fusion tree index: intermediate label plus the two coupling
/// multiplicity indices. For the quadruple (a,b,c,d) a row tree (e,i,j)
/// stands for (T^{ab}_{e,i} ox id_c) o T^{ec}_{d,j} and a column tree
/// (f,k,l) for (id_a ox T^{bc}_{f,k}) o T^{af}_{d,l}.
struct Tree {
    int mid = 0;
    unsigned i = 0;
    unsigned j = 0;
    bool operator==(const Tree&) const = default;
};

/// One stored F-matrix block: change of basis between the two tree bases
/// of Hom(L_d, (L_a ox L_b) ox L_c). Square and invertible; the exact
/// inverse is computed at validation time and kept alongside.
struct FBlock {
    std::array<int, 4> abcd{};
    std::vector<Tree> rows;  // (e,i,j), deterministic order
    std::vector<Tree> cols;  // (f,k,l)
    CycMatrix mat;
    CycMatrix inv;  // filled by validate_structure

    int row_pos(const Tree& t) const;
    int col_pos(const Tree& t) const;
};

/// Presentation of a split finite semisimple tensor category: simple
/// labels, unit, left duals, fusion multiplicities and F-matrices in the
/// unit-normalized gauge.
struct FusionData {
    long conductor = 1;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    std::vector<unsigned> mult;  // dense |V|^3, index (a*|V|+b)*|V|+c
    std::map<std::array<int, 4>, FBlock> fmatrices;

    int count() const { return static_cast<int>(labels.size()); }
    unsigned N(int a, int b, int c) const {
        return mult[(static_cast<std::size_t>(a) * labels.size() + b) * labels.size() + c];
    }
    unsigned& N_ref(int a, int b, int c) {
        return mult[(static_cast<std::size_t>(a) * labels.size() + b) * labels.size() + c];
    }

    /// Index of a label name; throws UnknownNameError.
    int label_index(const std::string& name) const;

    std::vector<Tree> row_trees(int a, int b, int c, int d) const;
    std::vector<Tree> col_trees(int a, int b, int c, int d) const;
    bool admissible(int a, int b, int c, int d) const;

    const FBlock& fblock(int a, int b, int c, int d) const;

    /// F entry between a row tree and a column tree; zero when the pair
    /// is not admissible for the quadruple.
    Cyclotomic f_entry(int a, int b, int c, int d, const Tree& row,
                       const Tree& col) const;
    /// Entry of the inverse F-matrix, indexed (column tree, row tree).
    Cyclotomic finv_entry(int a, int b, int c, int d, const Tree& col,
                          const Tree& row) const;

    Cyclotomic zero() const { return Cyclotomic(conductor); }
    Cyclotomic one() const { return Cyclotomic(conductor, Rational(1)); }
};

struct ValidationIssue {
    std::string where;
    std::string what;
};

struct ValidationReport {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Structural invariants: unit row/column of N, rigidity at the unit,
/// F-block presence for every admissible quadruple, squareness,
/// invertibility (stores the inverses), and the unit-normalized gauge.
/// Throws ValidationError on failure when `throwing` is set; otherwise
/// returns the issue list.
ValidationReport validate_structure(FusionData& fd, bool throwing = false);

/// Pentagon identity over all admissible label 5-tuples and tree pairs.
ValidationReport validate_pentagon(const FusionData& fd);

/// Duality checks: N(a, a^bar, unit) = 1 both ways, double dual has the
/// same fusion row, and the zig-zag normalization entry is nonzero.
ValidationReport validate_duality(const FusionData& fd);

/// Fusion-ring associativity screen: sum_c N(a,b,c)N(c,d,e) =
/// sum_f N(b,d,f)N(a,f,e).
ValidationReport validate_ring(const FusionData& fd);

/// Runs every validator (structure assumed already done at load time);
/// returns reports in deterministic order.
std::vector<ValidationReport> validate_all(FusionData& fd);

}  // namespace facekit
