#pragma once

#include <cstddef>
#include <vector>

#include "facekit/cyclotomic.hpp"

namespace facekit {

/// Dense matrix over one cyclotomic field Q(zeta_n).
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), conductor_(1) {}
    CycMatrix(std::size_t rows, std::size_t cols, long conductor)
        : rows_(rows), cols_(cols), conductor_(conductor),
          data_(rows * cols, Cyclotomic(conductor)) {}

    static CycMatrix identity(std::size_t n, long conductor);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long conductor() const { return conductor_; }

    Cyclotomic& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Cyclotomic& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    CycMatrix operator*(const CycMatrix& o) const;
    bool operator==(const CycMatrix& o) const;

private:
    std::size_t rows_, cols_;
    long conductor_;
    std::vector<Cyclotomic> data_;
};

struct SolveResult {
    bool consistent = false;
    std::vector<Cyclotomic> particular;               // one solution (if consistent)
    std::vector<std::vector<Cyclotomic>> nullspace;   // basis of ker(A)
};

/// Exact Gaussian elimination with first-nonzero pivoting. For
/// underdetermined consistent systems the particular solution sets all
/// free variables to zero.
SolveResult solve(const CycMatrix& A, const std::vector<Cyclotomic>& b);

std::vector<std::vector<Cyclotomic>> nullspace(const CycMatrix& A);

std::size_t rank(const CycMatrix& A);

/// Throws SingularMatrixError when A is not invertible.
CycMatrix inverse(const CycMatrix& A);

}  // namespace facekit
