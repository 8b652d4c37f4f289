#include "facekit/cyclotomic.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#include "facekit/errors.hpp"

namespace facekit {

namespace {

using Poly = std::vector<Rational>;  // ascending degree

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_divide_exact(Poly num, const Poly& den) {
    poly_trim(num);
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        Rational c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    poly_trim(num);
    if (!num.empty()) throw Error("internal: non-exact polynomial division");
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d  (computed recursively
    // inside the same lock; divisors are strictly smaller)
    std::function<const Poly&(long)> get = [&](long m) -> const Poly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        Poly p(m + 1);
        p[0] = Rational(-1);
        p[m] = Rational(1);
        for (long d = 1; d < m; ++d)
            if (m % d == 0) p = poly_divide_exact(std::move(p), get(d));
        return cache.emplace(m, std::move(p)).first->second;
    };
    return get(n);
}

long euler_phi(long n) {
    return static_cast<long>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic::Cyclotomic(long conductor) : n_(conductor), c_(conductor) {
    if (conductor < 1) throw Error("conductor must be positive");
}

Cyclotomic::Cyclotomic(long conductor, const Rational& r) : Cyclotomic(conductor) {
    c_[0] = r;
}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : n_(conductor), c_(std::move(coeffs)) {
    if (conductor < 1) throw Error("conductor must be positive");
    reduce();
}

Cyclotomic Cyclotomic::root_power(long conductor, long k) {
    Cyclotomic x(conductor);
    k %= conductor;
    if (k < 0) k += conductor;
    x.c_[static_cast<std::size_t>(k)] = Rational(1);
    x.reduce();
    return x;
}

void Cyclotomic::reduce() {
    // fold q^n = 1, then reduce modulo Phi_n
    if (c_.size() > static_cast<std::size_t>(n_)) {
        for (std::size_t i = c_.size(); i-- > static_cast<std::size_t>(n_);) {
            c_[i - n_] += c_[i];
            c_.pop_back();
        }
    }
    c_.resize(n_);
    const Poly& phi = cyclotomic_polynomial(n_);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = c_.size(); i-- > deg;) {
        Rational q = c_[i];  // phi is monic
        if (q.is_zero()) continue;
        std::size_t off = i - deg;
        for (std::size_t j = 0; j < phi.size(); ++j) c_[off + j] -= q * phi[j];
    }
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw Error("not a rational value: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::lifted(long conductor) const {
    if (conductor == n_) return *this;
    if (conductor % n_ != 0)
        throw ConductorMismatchError("cannot lift conductor " + std::to_string(n_) +
                                     " to " + std::to_string(conductor));
    long stride = conductor / n_;
    std::vector<Rational> out(conductor);
    for (long k = 0; k < n_; ++k) out[k * stride] = c_[k];
    return Cyclotomic(conductor, std::move(out));
}

namespace {
// lifts operands to a shared conductor: equal, or one divides the other
void align(Cyclotomic& a, Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return;
    if (b.conductor() % a.conductor() == 0) {
        a = a.lifted(b.conductor());
    } else if (a.conductor() % b.conductor() == 0) {
        b = b.lifted(a.conductor());
    } else {
        throw ConductorMismatchError(
            "conductor mismatch without a common lift: " +
            std::to_string(a.conductor()) + " vs " + std::to_string(b.conductor()));
    }
}
}  // namespace

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.conductor() != n_) {
        Cyclotomic a = *this, b = o;
        align(a, b);
        a += b;
        return *this = std::move(a);
    }
    for (long i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.conductor() != n_) {
        Cyclotomic a = *this, b = o;
        align(a, b);
        a *= b;
        return *this = std::move(a);
    }
    std::vector<Rational> out(2 * n_);
    for (long i = 0; i < n_; ++i) {
        if (c_[i].is_zero()) continue;
        for (long j = 0; j < n_; ++j)
            if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    reduce();
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero cyclotomic");
    // extended euclid of this (as polynomial) with Phi_n; gcd is a unit
    Poly r0(c_.begin(), c_.end());
    poly_trim(r0);
    Poly r1 = cyclotomic_polynomial(n_);
    Poly s0{Rational(1)}, s1;
    while (!r1.empty()) {
        // quotient of r0 by r1
        Poly q;
        {
            Poly num = r0;
            q.assign(num.size() >= r1.size() ? num.size() - r1.size() + 1 : 0,
                     Rational());
            for (std::size_t i = q.size(); i-- > 0;) {
                Rational cq = num[i + r1.size() - 1] / r1.back();
                q[i] = cq;
                if (!cq.is_zero())
                    for (std::size_t j = 0; j < r1.size(); ++j)
                        num[i + j] -= cq * r1[j];
            }
            poly_trim(num);
            r0.swap(r1);
            r1 = std::move(num);
        }
        Poly snew = poly_sub(s0, poly_mul(q, s1));
        s0.swap(s1);
        s1 = std::move(snew);
    }
    Rational lead = r0.back();
    for (auto& x : s0) x /= lead;
    return Cyclotomic(n_, std::move(s0));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    Cyclotomic a = *this, b = o;
    align(a, b);
    return a.c_ == b.c_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k < n_; ++k) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        bool neg = a.sign() < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string qpow = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        if (k == 0) {
            os << mag.str();
        } else if (mag.is_one()) {
            os << qpow;
        } else {
            os << mag.str() << "*" << qpow;
        }
    }
    if (first) return "0";
    return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text, long conductor) {
    Cyclotomic out(conductor);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty cyclotomic literal");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (!expect_term) {
            if (text[i] == '+') sign = 1;
            else if (text[i] == '-') sign = -1;
            else throw ParseError("expected '+' or '-' in '" + text + "'");
            ++i;
            expect_term = true;
            continue;
        }
        if (text[i] == '-') { sign = -sign; ++i; skip_ws(); }
        else if (text[i] == '+') { ++i; skip_ws(); }
        // term: [rational] [* q[^k]] | q[^k]
        Rational coef(1);
        bool have_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            coef = Rational::parse(text.substr(i, j - i));
            i = j;
            have_coef = true;
        }
        skip_ws();
        long power = 0;
        bool have_q = false;
        if (i < text.size() && (text[i] == '*' || text[i] == 'q')) {
            if (text[i] == '*') {
                if (!have_coef) throw ParseError("dangling '*' in '" + text + "'");
                ++i;
                skip_ws();
            }
            if (i >= text.size() || text[i] != 'q')
                throw ParseError("expected q after '*' in '" + text + "'");
            ++i;
            have_q = true;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw ParseError("expected exponent in '" + text + "'");
                power = std::stol(text.substr(i, j - i));
                i = j;
            }
        }
        if (!have_coef && !have_q)
            throw ParseError("expected term in '" + text + "' at position " +
                             std::to_string(i));
        Rational signed_coef = sign < 0 ? -coef : coef;
        out += Cyclotomic::root_power(conductor, power) * signed_coef;
        sign = 1;
        expect_term = false;
        skip_ws();
    }
    if (expect_term) throw ParseError("trailing operator in '" + text + "'");
    return out;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    return os << x.str();
}

}  // namespace facekit
