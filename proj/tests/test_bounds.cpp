#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "generators.hpp"
#include "weyl/bounds.hpp"
#include "weyl/nu.hpp"

using namespace weyl;

namespace {

constexpr double kPi = std::numbers::pi;

PiQuantity q(long long n, long long d = 1) { return pi2(Rational(n, d)); }

OrbifoldDescriptor desc(std::string_view atom) { return catalog_block(atom).descriptor; }

Hypotheses positive() {
  Hypotheses h;
  h.yamabe_sign = YamabeSign::Positive;
  return h;
}

const BoundResult& find(const std::vector<BoundResult>& all, BoundTag t) {
  for (const auto& b : all) {
    if (b.tag == t) return b;
  }
  throw std::logic_error("tag missing");
}

OrbifoldDescriptor orbifold_x() { return connected_sum(desc("S4/Z2"), desc("(S2xS2)/Z2")); }

}  // namespace

TEST_CASE("every tag is enumerated once, in order") {
  auto all = enumerate_bounds(desc("CP2"), positive());
  REQUIRE(all.size() == 13);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(bound_letter(all[i].tag) == static_cast<char>('a' + i));
  CHECK(bound_name(BoundTag::LargeIndex) == "large-index");
}

TEST_CASE("round S4 with positive Yamabe constant") {
  auto all = enumerate_bounds(desc("S4"), positive());
  const auto& d = find(all, BoundTag::FinitePi1);
  CHECK(d.applies);
  CHECK(d.value == PiQuantity());
  CHECK(d.equality_case == "round 4-sphere");
  BoundResult best = best_bound(desc("S4"), positive());
  CHECK(best.value == PiQuantity());
  CHECK(best.tag == BoundTag::FinitePi1);
  CHECK(best.equality_case == "round 4-sphere");
  CHECK_FALSE(find(all, BoundTag::ManifoldChi).applies);
}

TEST_CASE("CP2 with positive Yamabe constant") {
  auto all = enumerate_bounds(desc("CP2"), positive());
  const auto& g = find(all, BoundTag::B2Plus);
  CHECK(g.applies);
  CHECK(g.value == q(12));
  CHECK(g.equality_case == "Kahler-Einstein");
  CHECK(find(all, BoundTag::FinitePi1).value == q(10));
  CHECK(find(all, BoundTag::ManifoldChi).applies);
  CHECK(find(all, BoundTag::ManifoldChi).value == q(12));
  CHECK_FALSE(find(all, BoundTag::B2Minus).applies);
  BoundResult best = best_bound(desc("CP2"), positive());
  CHECK(best.value == q(12));
  CHECK(best.tag == BoundTag::B2Plus);
}

TEST_CASE("the orbifold X with two Z2-quotient summands") {
  auto all = enumerate_bounds(orbifold_x(), positive());
  const auto& f = find(all, BoundTag::LargeIndex);
  CHECK(f.applies);
  CHECK(f.value == q(4));
  CHECK(find(all, BoundTag::FinitePi1).value == PiQuantity());
  CHECK(find(all, BoundTag::B2Plus).value == q(8, 3));
  CHECK_FALSE(find(all, BoundTag::OrbifoldCover).applies);
  CHECK(best_bound(orbifold_x(), positive()).tag == BoundTag::LargeIndex);
}

TEST_CASE("S2xS2 with positive Yamabe constant") {
  OrbifoldDescriptor s = desc("S2xS2");
  auto all = enumerate_bounds(s, positive());
  CHECK(find(all, BoundTag::FinitePi1).value == q(8));
  CHECK(find(all, BoundTag::FiniteH1).value == q(8));
  CHECK(find(all, BoundTag::OrbifoldCover).value == q(8));
  CHECK(find(all, BoundTag::ManifoldChi).value == q(8));
  CHECK(find(all, BoundTag::B2Plus).value == q(32, 3));
  CHECK(find(all, BoundTag::B2Minus).value == q(32, 3));
  BoundResult best = best_bound(s, positive());
  CHECK(best.value == q(32, 3));
  CHECK(best.tag == BoundTag::B2Plus);
  // Without b2 data the best is the Aubin-type bound.
  OrbifoldDescriptor bare = s;
  bare.b2_plus.reset();
  bare.b2_minus.reset();
  BoundResult b = best_bound(bare, positive());
  CHECK(b.tag == BoundTag::FinitePi1);
  CHECK(b.value == q(8));
}

TEST_CASE("Yamabe zero") {
  OrbifoldDescriptor k3;
  k3.name = "K3";
  k3.euler = 24;
  k3.signature = -16;
  k3.b1 = 0;
  k3.b2_plus = 3;
  k3.b2_minus = 19;
  k3.h1_order = H1Order::finite(1);
  Hypotheses h;
  h.yamabe_sign = YamabeSign::Zero;
  BoundResult best = best_bound(k3, h);
  CHECK(best.tag == BoundTag::YamabeZero);
  CHECK(best.value == PiQuantity());
  CHECK(best.equality_case == "Ricci-flat");
  auto all = enumerate_bounds(k3, h);
  CHECK_FALSE(find(all, BoundTag::B2Plus).applies);
}

TEST_CASE("nothing declared") {
  BoundResult b = best_bound(desc("CP2bar"), Hypotheses{});
  CHECK(b.tag == BoundTag::Trivial);
  CHECK(b.value == PiQuantity());
  CHECK(best_bound(desc("S2xS2"), Hypotheses{}).value == PiQuantity());
  for (const auto& r : enumerate_bounds(desc("S2xT2"), Hypotheses{})) {
    if (r.tag != BoundTag::Trivial && r.tag != BoundTag::Signature) CHECK_FALSE(r.applies);
  }
}

TEST_CASE("hypotheses from data are never contradicted") {
  Hypotheses h = positive();
  h.b2_plus_positive = Tri::No;
  CHECK_THROWS_AS(enumerate_bounds(desc("CP2"), h), DomainError);
  Hypotheses m = positive();
  m.is_manifold = true;
  try {
    (void)enumerate_bounds(orbifold_x(), m);
    FAIL("expected InconsistentHypotheses");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::InconsistentHypotheses);
  }
  Hypotheses c = positive();
  c.seshadri_c2 = Rational(-1);
  CHECK_THROWS_AS(enumerate_bounds(desc("CP2"), c), DomainError);
}

TEST_CASE("unknown b2 is not promoted") {
  OrbifoldDescriptor d = desc("CP2");
  d.b2_plus.reset();
  d.b2_minus.reset();
  d.b1.reset();
  auto all = enumerate_bounds(d, positive());
  CHECK_FALSE(find(all, BoundTag::B2Plus).applies);
  Hypotheses h = positive();
  h.b2_plus_positive = Tri::Yes;
  CHECK(find(enumerate_bounds(d, h), BoundTag::B2Plus).applies);
}

TEST_CASE("cover data") {
  OrbifoldDescriptor s = desc("S4/Z2");
  s.pi1_orb = Pi1Descriptor::finite(2);
  // chi_orb = 1, tau_orb = 0, so 2 chi_orb + 3 tau_orb = 2.
  CHECK(find(enumerate_bounds(s, positive()), BoundTag::OrbifoldCover).value == q(0));
  s.cover_data = {CoverEntry{2, 2, 0, {GroupDescriptor::antipodal()}}};
  CHECK(find(enumerate_bounds(s, positive()), BoundTag::OrbifoldCover).value == q(2));
  s.cover_data = {CoverEntry{3, 2, 0, {}}};
  try {
    (void)enumerate_bounds(s, positive());
    FAIL("expected MissingInvariant");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::MissingInvariant);
  }
}

TEST_CASE("Seshadri and Itoh") {
  Hypotheses h;
  h.seshadri_c2 = Rational(24);
  h.itoh = Tri::Yes;
  auto all = enumerate_bounds(desc("CP2"), h);
  CHECK(find(all, BoundTag::Seshadri).applies);
  CHECK(find(all, BoundTag::Seshadri).value == q(12));
  CHECK(find(all, BoundTag::Itoh).value == q(12));
  CHECK_FALSE(find(enumerate_bounds(orbifold_x(), h), BoundTag::Itoh).applies);
}

TEST_CASE("self-dual positive scalar curvature obstruction") {
  ObstructionVerdict x = selfdual_psc_obstruction(orbifold_x());
  CHECK(x.obstructed);
  bool large = false;
  for (const auto& r : x.reasons) large = large || (r.theorem == "large-index" && r.inequality == "2 chi_orb - 3 tau_orb = 2 > 0");
  CHECK(large);
  CHECK_FALSE(selfdual_psc_obstruction(desc("CP2")).obstructed);
  CHECK_FALSE(selfdual_psc_obstruction(desc("WP(1,1,3)")).obstructed);
  ObstructionVerdict h = selfdual_psc_obstruction(desc("S4"), Tri::Yes);
  CHECK(h.obstructed);
  CHECK(h.reasons.front().theorem == "harmonic-wplus");
}

TEST_CASE("stabilisation threshold") {
  OrbifoldDescriptor d;
  d.name = "M";
  d.euler = 1;
  d.signature = 2;
  d.b2_plus = 2;
  d.b2_minus = 0;
  CHECK(stabilization_threshold(d) == 3);
  CHECK(stabilization_threshold(orbifold_x()) == 0);
  try {
    (void)stabilization_threshold(reverse_orientation(desc("CP2")));
    FAIL("expected HypothesisNotMet");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::HypothesisNotMet);
  }
  for (long long k = 1; k <= 20; ++k) {
    std::vector<OrbifoldDescriptor> parts(static_cast<std::size_t>(k), desc("CP2"));
    OrbifoldDescriptor m = k == 1 ? parts[0] : connected_sum(parts);
    long long n0 = stabilization_threshold(m);
    Rational base = chi_orb(m) - Rational(3) * tau_orb(m);
    REQUIRE(base + Rational(2 * n0) > Rational(0));
    if (n0 > 0) REQUIRE_FALSE(base + Rational(2 * (n0 - 1)) > Rational(0));
  }
}

TEST_CASE("Yamabe to W+ conversion") {
  CHECK(wplus_from_yamabe(0.0) == 0.0);
  CHECK(wplus_from_yamabe(16 * kPi) == doctest::Approx(32 * kPi * kPi / 3).epsilon(1e-14));
  CHECK(wplus_from_yamabe(8 * std::sqrt(6.0) * kPi) == doctest::Approx(16 * kPi * kPi).epsilon(1e-14));
}

TEST_CASE("property: ordering relations over random descriptors") {
  std::mt19937_64 rng(404);
  const Hypotheses h = positive();
  for (int t = 0; t < 1000; ++t) {
    OrbifoldDescriptor m = gen::random_descriptor(rng);
    auto all = enumerate_bounds(m, h);
    BoundResult best = best_bound(m, h);
    REQUIRE(best.applies);
    for (const auto& b : all) {
      if (b.applies) REQUIRE(*best.value >= *b.value);
    }
    const auto& f = find(all, BoundTag::LargeIndex);
    const auto& g = find(all, BoundTag::B2Plus);
    REQUIRE(f.value.has_value() == g.value.has_value());
    if (f.value) {
      REQUIRE(*g.value == Rational(2, 3) * *f.value);
      const auto& d = find(all, BoundTag::FinitePi1);
      if (d.value) {
        long long k = *m.pi1.finite_order();
        REQUIRE(*f.value - *d.value == pi2(Rational(8) / (Rational(k) * Rational(max_point_order(m.points)))));
      }
    }
  }
}
