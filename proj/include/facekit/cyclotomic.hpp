#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "facekit/rational.hpp"

namespace facekit {

/// Element of the cyclotomic field Q(zeta_n), stored as a length-n
/// coefficient vector over the powers 1, q, ..., q^{n-1} (q = zeta_n) and
/// kept reduced modulo the n-th cyclotomic polynomial. The reduced form is
/// unique, so equality of field elements is equality of coefficient
/// vectors. All arithmetic is exact.
class Cyclotomic {
public:
    /// Zero of Q(zeta_n).
    explicit Cyclotomic(long conductor = 1);
    /// The rational constant r inside Q(zeta_n).
    Cyclotomic(long conductor, const Rational& r);
    /// Arbitrary coefficient vector (any length; reduced on construction).
    Cyclotomic(long conductor, std::vector<Rational> coeffs);

    /// zeta_n^k.
    static Cyclotomic root_power(long conductor, long k);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q (only the constant coefficient).
    bool is_rational() const;
    Rational rational_value() const;

    /// Image under Q(zeta_n) -> Q(zeta_m) for n | m.
    Cyclotomic lifted(long conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    Cyclotomic& operator*=(const Rational& r);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Cyclotomic inverse() const;
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Literal syntax: sum of terms 'c' or 'c*q^k' with rational c,
    /// e.g. "1/2 - 1/2*q^2". Printing and parsing round-trip exactly.
    std::string str() const;
    static Cyclotomic parse(const std::string& text, long conductor);

private:
    long n_;
    std::vector<Rational> c_;

    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree
/// (cached; thread safe).
const std::vector<Rational>& cyclotomic_polynomial(long n);

/// Euler phi(n) = degree of the n-th cyclotomic polynomial.
long euler_phi(long n);

}  // namespace facekit
