#include "facekit/linalg.hpp"

#include <utility>

#include "facekit/errors.hpp"

namespace facekit {

CycMatrix CycMatrix::identity(std::size_t n, long conductor) {
    CycMatrix m(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(conductor, Rational(1));
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatchError("matrix product dimension mismatch");
    CycMatrix out(rows_, o.cols_, conductor_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cyclotomic& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Cyclotomic& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return data_ == o.data_;
}

namespace {

struct Rref {
    CycMatrix m;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// reduced row echelon form, first nonzero pivot in each column
Rref rref(CycMatrix a) {
    Rref out{CycMatrix(), {}};
    std::size_t rr = 0;
    for (std::size_t col = 0; col < a.cols() && rr < a.rows(); ++col) {
        std::size_t piv = rr;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rr)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(rr, j));
        Cyclotomic inv = a.at(rr, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(rr, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rr || a.at(r, col).is_zero()) continue;
            Cyclotomic f = a.at(r, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(r, j) -= f * a.at(rr, j);
        }
        out.pivots.push_back(col);
        ++rr;
    }
    out.m = std::move(a);
    return out;
}

}  // namespace

SolveResult solve(const CycMatrix& A, const std::vector<Cyclotomic>& b) {
    if (b.size() != A.rows())
        throw DimensionMismatchError("solve: rhs length " + std::to_string(b.size()) +
                                     " != rows " + std::to_string(A.rows()));
    CycMatrix aug(A.rows(), A.cols() + 1, A.conductor());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[r];
    }
    Rref red = rref(std::move(aug));

    SolveResult out;
    // inconsistent iff some pivot lands in the rhs column
    for (std::size_t p : red.pivots)
        if (p == A.cols()) return out;
    out.consistent = true;
    out.particular.assign(A.cols(), Cyclotomic(A.conductor()));
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        out.particular[red.pivots[r]] = red.m.at(r, A.cols());

    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;
    for (std::size_t fc = 0; fc < A.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Cyclotomic> v(A.cols(), Cyclotomic(A.conductor()));
        v[fc] = Cyclotomic(A.conductor(), Rational(1));
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            v[red.pivots[r]] = -red.m.at(r, fc);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Cyclotomic>> nullspace(const CycMatrix& A) {
    std::vector<Cyclotomic> zero(A.rows(), Cyclotomic(A.conductor()));
    return solve(A, zero).nullspace;
}

std::size_t rank(const CycMatrix& A) {
    return rref(A).pivots.size();
}

CycMatrix inverse(const CycMatrix& A) {
    if (A.rows() != A.cols())
        throw DimensionMismatchError("inverse of non-square matrix");
    std::size_t n = A.rows();
    CycMatrix aug(n, 2 * n, A.conductor());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, n + r) = Cyclotomic(A.conductor(), Rational(1));
    }
    Rref red = rref(std::move(aug));
    if (red.pivots.size() < n || red.pivots[n - 1] != n - 1)
        throw SingularMatrixError("matrix is singular");
    CycMatrix out(n, n, A.conductor());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = red.m.at(r, n + c);
    return out;
}

}  // namespace facekit
