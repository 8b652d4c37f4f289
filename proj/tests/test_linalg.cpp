#include <doctest.h>

#include <random>

#include "facekit/errors.hpp"
#include "facekit/linalg.hpp"

using namespace facekit;

namespace {

Cyclotomic q(long n, long k = 1) { return Cyclotomic::root_power(n, k); }

std::vector<Cyclotomic> mat_apply(const CycMatrix& A, const std::vector<Cyclotomic>& x) {
    std::vector<Cyclotomic> out(A.rows(), Cyclotomic(A.conductor()));
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) out[r] += A.at(r, c) * x[c];
    return out;
}

}  // namespace

TEST_CASE("identity solve returns the rhs") {
    CycMatrix I = CycMatrix::identity(3, 5);
    std::vector<Cyclotomic> b = {q(5), q(5, 2), Cyclotomic(5, Rational(7))};
    SolveResult r = solve(I, b);
    REQUIRE(r.consistent);
    CHECK(r.particular == b);
    CHECK(r.nullspace.empty());
}

TEST_CASE("1x1 system against the inverse oracle") {
    CycMatrix A(1, 1, 3);
    A.at(0, 0) = Cyclotomic(3, Rational(1)) + q(3);
    SolveResult r = solve(A, {Cyclotomic(3, Rational(1))});
    REQUIRE(r.consistent);
    CHECK(r.particular[0] == -q(3));
    CHECK(r.particular[0] == A.at(0, 0).inverse());
}

TEST_CASE("inconsistent system yields a definite no-solution verdict") {
    CycMatrix A(2, 1, 1);
    A.at(0, 0) = Cyclotomic(1, Rational(1));
    A.at(1, 0) = Cyclotomic(1, Rational(1));
    SolveResult r = solve(A, {Cyclotomic(1, Rational(1)), Cyclotomic(1, Rational(2))});
    CHECK_FALSE(r.consistent);
    CHECK_THROWS_AS(solve(A, {Cyclotomic(1)}), DimensionMismatchError);
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(CycMatrix(2, 2, 1)).size() == 2);
    CHECK(nullspace(CycMatrix::identity(4, 1)).empty());

    CycMatrix A(2, 2, 3);
    A.at(0, 0) = Cyclotomic(3, Rational(1));
    A.at(0, 1) = Cyclotomic(3, Rational(1));
    A.at(1, 0) = q(3);
    A.at(1, 1) = q(3);
    auto basis = nullspace(A);
    REQUIRE(basis.size() == 1);
    // proportional to (1, -1)
    CHECK(basis[0][0] == -basis[0][1]);
    CHECK_FALSE(basis[0][0].is_zero());
}

TEST_CASE("solve and nullspace verified by substitution") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<std::size_t> sz(1, 5);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t rows = sz(rng), cols = sz(rng);
        CycMatrix A(rows, cols, 5);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                A.at(r, c) = Cyclotomic(5, Rational(val(rng))) +
                             q(5) * Rational(val(rng));
        std::vector<Cyclotomic> b(rows, Cyclotomic(5));
        for (auto& x : b) x = Cyclotomic(5, Rational(val(rng)));
        SolveResult r = solve(A, b);
        if (r.consistent) CHECK(mat_apply(A, r.particular) == b);
        std::vector<Cyclotomic> zero(rows, Cyclotomic(5));
        for (const auto& v : r.nullspace) CHECK(mat_apply(A, v) == zero);
        CHECK(r.nullspace.size() == cols - rank(A));
    }
}

TEST_CASE("exact inverse") {
    // fibonacci F-matrix in Q(zeta_5); involutive, so A = A^{-1}
    Cyclotomic phi_inv = q(5) + q(5, 4);
    CycMatrix A(2, 2, 5);
    A.at(0, 0) = phi_inv;
    A.at(0, 1) = phi_inv;
    A.at(1, 0) = Cyclotomic(5, Rational(1));
    A.at(1, 1) = -phi_inv;
    CycMatrix Ai = inverse(A);
    CHECK(A * Ai == CycMatrix::identity(2, 5));
    CHECK(Ai == A);

    CycMatrix S(2, 2, 1);
    S.at(0, 0) = Cyclotomic(1, Rational(1));
    S.at(0, 1) = Cyclotomic(1, Rational(2));
    S.at(1, 0) = Cyclotomic(1, Rational(2));
    S.at(1, 1) = Cyclotomic(1, Rational(4));
    CHECK_THROWS_AS(inverse(S), SingularMatrixError);
}
