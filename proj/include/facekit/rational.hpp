#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace facekit {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (enforced by the GMP canonical form).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "n" or "n/d" with optional leading minus.
    static Rational parse(const std::string& text);

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace facekit
