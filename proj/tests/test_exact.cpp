#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "weyl/exact.hpp"

using namespace weyl;
using oracle::Frac;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
PiQuantity q(long long n, long long d = 1) { return pi2(Rational(n, d)); }
}  // namespace

TEST_CASE("rationals stay reduced with positive denominator") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(0, -7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("pi^2 addition") {
  CHECK((q(12) + q(-12)) == PiQuantity());
  CHECK((q(8) + q(32, 3) * Rational(-1)) == q(-8, 3));
  PiQuantity acc;
  for (int i = 0; i < 9; ++i) acc += q(4, 3);
  CHECK(acc == q(12));
  CHECK((Rational(9) * q(4, 3)) == q(12));
}

TEST_CASE("exact comparison") {
  CHECK(compare(q(8), q(32, 3)) == Ordering::Less);
  CHECK(compare(PiQuantity(), PiQuantity()) == Ordering::Equal);
  CHECK(compare(q(12), q(28, 3)) == Ordering::Greater);
  CHECK(compare(q(-1, 3), q(-1, 2)) == Ordering::Greater);
}

TEST_CASE("conversion to double") {
  CHECK(PiQuantity().to_double() == 0.0);
  double v = q(12).to_double();
  CHECK(std::abs(v - 12.0 * kPi2) <= 4 * std::numeric_limits<double>::epsilon() * v);
  CHECK(v == doctest::Approx(118.435252).epsilon(1e-8));
  CHECK(q(8, 3).to_double() == doctest::Approx(26.3189).epsilon(1e-5));
}

TEST_CASE("overflow is reported, not wrapped") {
  Rational big(static_cast<long long>(1) << 62);
  Rational x = big;
  CHECK_THROWS_AS(
      {
        for (int i = 0; i < 4; ++i) x = x * big;
      },
      DomainError);
  try {
    Rational y = big * big * big;
    (void)y;
    FAIL("expected overflow");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
  Rational a(1, static_cast<long long>(1) << 62), b(1, (static_cast<long long>(1) << 62) - 1);
  CHECK_THROWS_AS(a * b * a, DomainError);
}

TEST_CASE("render and parse p/q·π^2") {
  CHECK(q(32, 3).str() == "32/3·π^2");
  CHECK(q(-8, 3).str() == "-8/3·π^2");
  CHECK(PiQuantity::parse("32/3·π^2") == q(32, 3));
  CHECK(PiQuantity::parse("12*pi^2") == q(12));
  CHECK(PiQuantity::parse("0") == PiQuantity());
  CHECK(Rational::parse("-14/6") == Rational(-7, 3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(PiQuantity::parse("3"));
}

TEST_CASE("intervals") {
  PiInterval e = PiInterval::exactly(q(12));
  CHECK(e.is_exact());
  PiInterval i(q(8), q(32, 3));
  CHECK_FALSE(i.is_exact());
  CHECK(i.str() == "[8·π^2, 32/3·π^2]");
  PiInterval open = PiInterval::at_least(q(1));
  CHECK_FALSE(open.upper_finite());
  CHECK(open.str() == "[1·π^2, +inf)");
  CHECK_THROWS_AS(PiInterval(q(2), q(1)), std::invalid_argument);
}

TEST_CASE("field axioms against the long long oracle (randomised)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 1000; ++t) {
    Frac fa(num(rng), den(rng)), fb(num(rng), den(rng)), fc(num(rng), den(rng));
    Rational a(fa.n, fa.d), b(fb.n, fb.d), c(fc.n, fc.d);
    REQUIRE(oracle::same(a + b, fa + fb));
    REQUIRE(oracle::same(a - b, fa - fb));
    REQUIRE(oracle::same(a * b, fa * fb));
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    if (!b.is_zero()) {
      REQUIRE(oracle::same(a / b, fa / fb));
      REQUIRE((b * b.reciprocal()) == Rational(1));
    }
    REQUIRE((a + (-a)).is_zero());
    REQUIRE(((a < b) == (fa.n * fb.d < fb.n * fa.d)));
  }
}

TEST_CASE("pi^2 arithmetic commutes with conversion") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000);
  for (int t = 0; t < 1000; ++t) {
    PiQuantity a = q(num(rng), den(rng)), b = q(num(rng), den(rng));
    Rational k(num(rng), den(rng));
    double sum = a.to_double() + b.to_double();
    double scaled = k.to_double() * a.to_double();
    REQUIRE((a + b).to_double() == doctest::Approx(sum).epsilon(1e-12).scale(std::abs(a.to_double()) + std::abs(b.to_double())));
    REQUIRE((k * a).to_double() == doctest::Approx(scaled).epsilon(1e-12));
  }
}
