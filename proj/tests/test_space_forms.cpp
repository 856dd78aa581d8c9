#include <doctest.h>

#include "oracle.hpp"
#include "weyl/space_forms.hpp"

using namespace weyl;

TEST_CASE("closed-form eta of cyclic quotients") {
  CHECK(eta_cyclic(1) == Rational(0));
  CHECK(eta_cyclic(2) == Rational(0));
  CHECK(eta_cyclic(3) == Rational(-2, 9));
  CHECK(eta_cyclic(10) == Rational(-12, 5));
  for (long long n = 1; n <= 200; ++n) REQUIRE(oracle::same(eta_cyclic(n), oracle::eta_closed(n)));
}

TEST_CASE("cotangent sum") {
  CHECK(eta_cotangent_oracle(2) == doctest::Approx(0.0));
  CHECK(eta_cotangent_oracle(3) == doctest::Approx(-2.0 / 9.0).epsilon(1e-12));
  CHECK(eta_cotangent_oracle(10) == doctest::Approx(-2.4).epsilon(1e-12));
  for (long long n = 2; n <= 200; ++n) {
    REQUIRE(std::abs(eta_cyclic(n).to_double() - eta_cotangent_oracle(n)) < 1e-9);
    REQUIRE(std::abs(eta_cyclic(n).to_double() - oracle::eta_cot_sum(n)) < 1e-9);
  }
}

TEST_CASE("eta of catalog groups") {
  CHECK(eta_for_group(GroupDescriptor::antipodal()).signed_value() == Rational(0));
  CHECK(eta_for_group(GroupDescriptor::cyclic_su2(4)).signed_value() == Rational(-1, 2));
  CHECK(eta_for_group(GroupDescriptor::trivial()).signed_value() == Rational(0));
  CHECK(eta_for_group(GroupDescriptor::ade_a(5)).signed_value() == eta_cyclic(5));
  for (long long n = 2; n <= 60; ++n) {
    auto g = GroupDescriptor::cyclic_su2(n);
    REQUIRE(eta_for_group(g.reversed()).signed_value() == -eta_for_group(g).signed_value());
    REQUIRE(eta_for_group(g).reversed().signed_value() == -eta_for_group(g).signed_value());
  }
}

TEST_CASE("D and E tags are not guessed") {
  for (auto g : {GroupDescriptor::ade_d(3), GroupDescriptor::ade_e(6), GroupDescriptor::ade_e(7),
                 GroupDescriptor::ade_e(8), GroupDescriptor::cyclic_other(5)}) {
    CHECK_FALSE(has_catalog_eta(g));
    try {
      (void)eta_for_group(g);
      FAIL("expected NotInCatalog");
    } catch (const DomainError& e) {
      CHECK(e.code() == ErrorCode::NotInCatalog);
    }
  }
}

TEST_CASE("group orders") {
  CHECK(GroupDescriptor::antipodal().order() == 2);
  CHECK(GroupDescriptor::ade_a(7).order() == 7);
  CHECK(GroupDescriptor::ade_d(5).order() == 20);
  CHECK(GroupDescriptor::ade_e(6).order() == 24);
  CHECK(GroupDescriptor::ade_e(7).order() == 48);
  CHECK(GroupDescriptor::ade_e(8).order() == 120);
}

TEST_CASE("group names round-trip") {
  for (auto g : {GroupDescriptor::trivial(), GroupDescriptor::antipodal(), GroupDescriptor::cyclic_su2(7),
                 GroupDescriptor::cyclic_other(4), GroupDescriptor::ade_a(3), GroupDescriptor::ade_d(4),
                 GroupDescriptor::ade_e(6), GroupDescriptor::ade_e(7), GroupDescriptor::ade_e(8)}) {
    CHECK(GroupDescriptor::parse(g.name()) == g);
    CHECK(GroupDescriptor::parse(g.reversed().name()) == g.reversed());
  }
  CHECK(GroupDescriptor::parse("Zn-su2(3)").name() == "Zn-su2(3)");
  CHECK_THROWS_AS(GroupDescriptor::parse("Q8"), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::parse("Zn-su2(x)"), std::invalid_argument);
}
