#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "weyl/nu.hpp"

using namespace weyl;
using oracle::Frac;

namespace {

PiQuantity q(long long n, long long d = 1) { return pi2(Rational(n, d)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.code();
  }
  FAIL("no DomainError thrown");
  return ErrorCode::Overflow;
}

}  // namespace

TEST_CASE("weighted projective planes") {
  CHECK(block_weighted_projective(1, 1, 1).nu == PiInterval::exactly(q(12)));
  CHECK(block_weighted_projective(1, 2, 3).nu == PiInterval::exactly(q(28, 3)));
  std::vector<std::array<long long, 3>> triples;
  for (long long a = 1; a <= 7 && triples.size() < 20; ++a)
    for (long long b = a; b <= 9 && triples.size() < 20; ++b)
      for (long long c = b + 1; c <= 11 && triples.size() < 20; ++c)
        if (std::gcd(a, b) == 1 && std::gcd(b, c) == 1 && std::gcd(a, c) == 1) triples.push_back({a, b, c});
  REQUIRE(triples.size() == 20);
  for (auto [a, b, c] : triples) {
    BuildingBlock w = block_weighted_projective(a, b, c);
    CAPTURE(w.name());
    REQUIRE(w.nu.is_exact());
    CHECK(oracle::same(w.nu.lower(), oracle::nu_weighted(a, b, c)));
    CHECK(w.nu.lower() >= pi2(Rational(12) * tau_orb(w.descriptor)));
  }
  CHECK(code_of([] { (void)block_weighted_projective(2, 4, 5); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { (void)block_weighted_projective(0, 1, 1); }) == ErrorCode::InvalidWeights);
}

TEST_CASE("WP(1,1,n) agrees with the eta-corrected formula") {
  for (long long n = 1; n <= 100; ++n) {
    BuildingBlock w = block_weighted_projective(1, 1, n);
    Frac closed = Frac(12) * (Frac(1) + Frac((n - 1) * (n - 2), 3 * n));
    REQUIRE(oracle::same(w.nu.lower(), closed));
    REQUIRE(closed == oracle::nu_weighted(1, 1, n));
  }
}

TEST_CASE("catalog values") {
  CHECK(block_cp2().nu == PiInterval::exactly(q(12)));
  CHECK(block_cp2().nu_plus == PiInterval::exactly(q(12)));
  for (const auto& f : {block_s4(), block_s4_z2(), block_s4_zn(5), block_s1xs3(), block_s1xs3_zn(3), block_s2xt2()}) {
    CAPTURE(f.name());
    CHECK(f.is_zero_filler);
    CHECK(f.nu == PiInterval::exactly(PiQuantity()));
    CHECK(tau_orb(f.descriptor) == Rational(0));
  }
  for (long long n = 2; n <= 30; ++n) {
    BuildingBlock a = block_ale('A', n);
    REQUIRE(oracle::same(a.nu.lower(), Frac(8) * (Frac(n) - Frac(1, n))));
  }
  BuildingBlock z2 = block_s2xs2_z2();
  CHECK(z2.nu_plus == PiInterval::exactly(q(32, 3)));
  CHECK(z2.nu == PiInterval(PiQuantity(), q(32, 3)));
  CHECK(code_of([] { (void)block_ale('D', 4); }) == ErrorCode::NotInCatalog);
  CHECK(code_of([] { (void)catalog_block("ALE(E,6)"); }) == ErrorCode::NotInCatalog);
  CatalogOptions lit;
  lit.paper_literal_ale = true;
  // D(4) is the binary dihedral group of order 16.
  CHECK(block_ale('D', 4, lit).nu.lower() == q(255, 2));
  for (const auto& b : catalog_listing(lit)) {
    CAPTURE(b.name());
    CHECK(b.nu.lower() >= pi2(Rational(12) * tau_orb(b.descriptor)));
    CHECK(b.nu_plus.lower() >= b.nu.lower());
  }
}

TEST_CASE("nu of connected sums") {
  NuValue v = nu_connected_sum(parse_sum_expression("2*CP2 # S2xT2"));
  CHECK(v.exact);
  CHECK(v.interval == PiInterval::exactly(q(24)));
  NuValue z = nu_connected_sum({block_s2xt2()});
  CHECK(z.exact);
  CHECK(z.interval == PiInterval::exactly(PiQuantity()));
  NuValue w = nu_connected_sum({block_weighted_projective(1, 1, 3)});
  CHECK(w.exact);
  CHECK(w.interval.lower() == q(44, 3));
  for (long long k = 1; k <= 6; ++k) {
    std::vector<BuildingBlock> bl(static_cast<std::size_t>(k), block_cp2());
    bl.push_back(block_s4_zn(3));
    bl.push_back(block_s1xs3());
    bl.push_back(block_s2xt2());
    NuValue s = nu_connected_sum(bl);
    REQUIRE(s.exact);
    REQUIRE(s.interval.lower() == q(12 * k));
  }
  NuValue mixed = nu_connected_sum({block_cp2(), block_s2xs2_z2()});
  CHECK_FALSE(mixed.exact);
  CHECK(mixed.interval.lower() == q(12));
  CHECK(mixed.interval.upper() == q(68, 3));
}

TEST_CASE("nu_plus of connected sums") {
  auto x = parse_sum_expression("S4/Z2 # (S2xS2)/Z2");
  BoundResult f;
  f.tag = BoundTag::LargeIndex;
  f.applies = true;
  f.value = q(4);
  NuValue v = nu_plus_connected_sum(x, f);
  CHECK_FALSE(v.exact);
  CHECK(v.interval == PiInterval(q(8), q(32, 3)));
  NuValue c = nu_plus_connected_sum({block_cp2()});
  CHECK(c.exact);
  CHECK(c.interval == PiInterval::exactly(q(12)));
  CHECK(nu_plus_connected_sum(parse_sum_expression("CP2 # S2xT2")).interval == PiInterval::exactly(q(12)));
  NuValue z = nu_plus_connected_sum({block_s2xs2_z2()});
  CHECK(z.exact);
  CHECK(z.interval == PiInterval::exactly(q(32, 3)));
  CHECK(code_of([] { (void)nu_plus_connected_sum(parse_sum_expression("WP(1,2,3) # (S2xS2)/Z2")); }) == ErrorCode::InfiniteUpper);
}

TEST_CASE("permutations do not change nu") {
  std::mt19937_64 rng(17);
  std::vector<BuildingBlock> base = parse_sum_expression("CP2 # WP(1,2,3) # S2xT2 # (S2xS2)/Z2 # ALE(A,3) # S4/Z2");
  NuValue ref = nu_connected_sum(base);
  for (int t = 0; t < 200; ++t) {
    std::shuffle(base.begin(), base.end(), rng);
    NuValue v = nu_connected_sum(base);
    REQUIRE(v.interval == ref.interval);
    REQUIRE(v.exact == ref.exact);
  }
}

TEST_CASE("expression language") {
  auto three = parse_sum_expression("3*WP(1,1,2)");
  CHECK(three.size() == 3);
  auto spaced = parse_sum_expression("  2 * CP2#S4/Zn(5) #  Ln(3) #S1xS3/Zn(2)#CP2bar # S2xS2 # S4 # S1xS3");
  CHECK(spaced.size() == 9);
  CHECK(spaced[2].name() == "S4/Zn(5)");
  for (const char* bad : {"", "CP2 #", "CP3", "2*", "WP(1,2)", "CP2 ## S4", "ALE(B,2)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sum_expression(bad), ParseError);
  }
  try {
    (void)parse_sum_expression("CP2 # XYZ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
  CHECK(code_of([] { (void)parse_sum_expression("WP(2,4,5)"); }) == ErrorCode::InvalidWeights);
  CatalogOptions lit;
  lit.paper_literal_ale = true;
  CHECK(parse_sum_expression("ALE(D,4)", lit).size() == 1);
}
