#include "facekit/rational.hpp"

#include <cctype>
#include <ostream>

#include "facekit/errors.hpp"

namespace facekit {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::parse(const std::string& text) {
    // strict "[-]digits[/digits]"
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t numEnd = digits(i);
    if (numEnd == i) throw ParseError("bad rational literal: '" + text + "'");
    i = numEnd;
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("bad rational literal: '" + text + "'");
        std::size_t denEnd = digits(i + 1);
        if (denEnd == i + 1 || denEnd != text.size())
            throw ParseError("bad rational literal: '" + text + "'");
    }
    mpq_class v(text, 10);
    if (v.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
    v.canonicalize();
    return Rational(v);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace facekit
