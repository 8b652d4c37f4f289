#include <doctest.h>

#include <random>

#include "facekit/cyclotomic.hpp"
#include "facekit/errors.hpp"

using namespace facekit;

namespace {

Cyclotomic q(long n, long k = 1) { return Cyclotomic::root_power(n, k); }
Cyclotomic c1(long n) { return Cyclotomic(n, Rational(1)); }

Cyclotomic random_cyc(std::mt19937& rng, long n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> coeffs(n);
    for (auto& x : coeffs) x = Rational(num(rng), den(rng));
    return Cyclotomic(n, std::move(coeffs));
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("3/0"), DivisionByZeroError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZeroError);
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
}

TEST_CASE("defining relations of small roots of unity") {
    CHECK(q(4) * q(4) == Cyclotomic(4, Rational(-1)));

    Cyclotomic s = c1(5);
    for (long k = 1; k <= 4; ++k) s += q(5, k);
    CHECK(s.is_zero());

    Cyclotomic sqrt2 = q(8, 1) + q(8, 7);
    CHECK(sqrt2 * sqrt2 == Cyclotomic(8, Rational(2)));
}

TEST_CASE("inverses") {
    CHECK(c1(7).inverse() == c1(7));
    CHECK(q(3).inverse() == q(3, 2));

    // multiply-back oracle fixes the expected value of 1/(1 + zeta_3)
    Cyclotomic a = c1(3) + q(3);
    Cyclotomic inv = a.inverse();
    CHECK((a * inv).is_one());
    CHECK(inv == -q(3));

    CHECK_THROWS_AS(Cyclotomic(5).inverse(), DivisionByZeroError);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(12345);
    for (long n : {1L, 3L, 4L, 5L, 8L, 12L}) {
        for (int iter = 0; iter < 25; ++iter) {
            Cyclotomic a = random_cyc(rng, n), b = random_cyc(rng, n),
                       c = random_cyc(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("canonicalization is idempotent and equality is coefficientwise") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 50; ++iter) {
        Cyclotomic a = random_cyc(rng, 12);
        Cyclotomic again(a.conductor(), a.coeffs());
        CHECK(again.coeffs() == a.coeffs());
        CHECK(again == a);
    }
    // high powers fold onto the canonical spanning set
    std::vector<Rational> raw(20);
    raw[19] = Rational(1);  // q^19 with conductor 5 -> q^4
    CHECK(Cyclotomic(5, raw) == q(5, 4));
    long phi5 = euler_phi(5);
    CHECK(phi5 == 4);
    // canonical form lives below degree phi(5): q^4 = -1 - q - q^2 - q^3
    CHECK(q(5, 4).coeffs()[4].is_zero());
    CHECK(q(5, 4).coeffs()[0] == Rational(-1));
    CHECK(q(5, 4).str() == "-1 - q - q^2 - q^3");
}

TEST_CASE("literal round trip") {
    Cyclotomic x = Cyclotomic(5, Rational(1, 2)) - q(5, 2) * Rational(1, 2);
    CHECK(x.str() == "1/2 - 1/2*q^2");
    CHECK(Cyclotomic::parse("1/2 - 1/2*q^2", 5) == x);
    // values reduce before printing: q^2 at conductor 4 is just -1
    CHECK((Cyclotomic(4, Rational(1, 2)) - q(4, 2) * Rational(1, 2)).str() == "1");
    CHECK(Cyclotomic::parse("0", 8).is_zero());
    CHECK(Cyclotomic::parse("q", 5) == q(5));
    CHECK(Cyclotomic::parse("-q + 1", 5) == c1(5) - q(5));
    CHECK(Cyclotomic::parse("2*q^3", 7) == q(7, 3) * Rational(2));

    std::mt19937 rng(999);
    for (long n : {1L, 2L, 5L, 8L}) {
        for (int iter = 0; iter < 40; ++iter) {
            Cyclotomic a = random_cyc(rng, n);
            CHECK(Cyclotomic::parse(a.str(), n) == a);
        }
    }
    CHECK_THROWS_AS(Cyclotomic::parse("1 +", 5), ParseError);
    CHECK_THROWS_AS(Cyclotomic::parse("* q", 5), ParseError);
}

TEST_CASE("conductor lifting") {
    // zeta_2 = -1 inside Q(zeta_4)
    CHECK(q(2).lifted(4) == q(4, 2));
    CHECK(q(2) + c1(4) == q(4, 2) + c1(4));
    CHECK_THROWS_AS(q(3) + q(4), ConductorMismatchError);
    CHECK_THROWS_AS(q(3).lifted(4), ConductorMismatchError);
    // rational constants lift to any conductor
    CHECK(Cyclotomic(1, Rational(2)) * q(5) == q(5) + q(5));
}

TEST_CASE("cyclotomic polynomial table") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(12) == 4);
    const auto& phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    CHECK(phi12.size() == 5);
    CHECK(phi12[0] == Rational(1));
    CHECK(phi12[2] == Rational(-1));
    CHECK(phi12[4] == Rational(1));
}
