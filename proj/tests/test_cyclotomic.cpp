#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dwred/cyclotomic.hpp"

using namespace dwred;

namespace {

CyclotomicSum zeta(int num, int den) {
    return CyclotomicSum::root_of_unity(Phase(num, den));
}

} // namespace

TEST_CASE("full sums of roots of unity vanish") {
    for (int k = 2; k <= 12; ++k) {
        CyclotomicSum s;
        for (int j = 0; j < k; ++j) s += zeta(j, k);
        CHECK(s.is_zero());
        CHECK(s == CyclotomicSum::zero());
    }
}

TEST_CASE("equality across conductors") {
    CHECK(zeta(2, 4) == CyclotomicSum(-1));
    CHECK(zeta(1, 6) == CyclotomicSum::one() + zeta(1, 3));
    CHECK(zeta(3, 4) == -zeta(1, 4));
    CHECK(zeta(2, 6) == zeta(1, 3));
}

TEST_CASE("rational detection") {
    CHECK((zeta(1, 8) * zeta(1, 8) * zeta(1, 8) * zeta(1, 8)).rational_value() ==
          Rational(-1));
    CyclotomicSum s = zeta(1, 5) + zeta(2, 5) + zeta(3, 5) + zeta(4, 5);
    REQUIRE(s.rational_value().has_value());
    CHECK(*s.rational_value() == Rational(-1));
    CHECK(s.conductor() == 1); // rational values renormalize to conductor 1
    CHECK(!zeta(1, 3).rational_value().has_value());
}

TEST_CASE("ring arithmetic") {
    // (1 + z3)(1 + z3^2) = 1 + z3 + z3^2 + 1 = 1
    CyclotomicSum a = CyclotomicSum::one() + zeta(1, 3);
    CyclotomicSum b = CyclotomicSum::one() + zeta(2, 3);
    CHECK(a * b == CyclotomicSum::one());
    CHECK(a - a == CyclotomicSum::zero());
    CHECK(a.scaled(Rational(3, 2)) + a.scaled(Rational(-3, 2)) == CyclotomicSum::zero());
    CHECK(zeta(1, 4) * zeta(1, 4) == CyclotomicSum(-1));
    CHECK((-zeta(1, 4)) == zeta(3, 4));
}

TEST_CASE("mixed-conductor arithmetic") {
    // z4 * z3 = z12^(3+4)
    CHECK(zeta(1, 4) * zeta(1, 3) == zeta(7, 12));
    CHECK(zeta(1, 2) + zeta(1, 3) + zeta(2, 3) == CyclotomicSum(-2));
}

TEST_CASE("float view approximates the exact value") {
    CyclotomicSum v = zeta(1, 7).scaled(Rational(2, 3)) + CyclotomicSum(5);
    auto z = v.to_complex();
    const double tau = 6.283185307179586476925287;
    double re = 5 + 2.0 / 3.0 * std::cos(tau / 7);
    double im = 2.0 / 3.0 * std::sin(tau / 7);
    CHECK(std::abs(z.real() - re) < 1e-9);
    CHECK(std::abs(z.imag() - im) < 1e-9);
}

TEST_CASE("display strings") {
    CHECK(CyclotomicSum(Rational(81)).str() == "81");
    CHECK(CyclotomicSum(Rational(1, 2)).str() == "1/2");
    CHECK(zeta(1, 3).str() == "1*z3^1");
}

TEST_CASE("rational arithmetic stays reduced and guards its bounds") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    long long big = INT64_MAX;
    CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
    // 128-bit intermediates keep legitimate large sums exact
    CHECK(Rational(big - 1, big) + Rational(1, big) == Rational(1));
}
