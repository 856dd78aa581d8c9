#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "weyl/bounds.hpp"
#include "weyl/curvature/functionals.hpp"
#include "weyl/errors.hpp"
#include "weyl/nu.hpp"

using namespace weyl::curvature;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<CatalogMetric> all_metrics() {
  return {round_s4(), s2xs2(1.0, 1.0), s2xs2(0.7, 1.6), cp2_fubini_study(), flat_box()};
}

double max_abs(const Tensor4& t) {
  double m = 0.0;
  for (double v : t.c) m = std::max(m, std::abs(v));
  return m;
}

// Sectional curvature of the coordinate plane (i, j).
double sectional(const PointCurvature& p, int i, int j) {
  return p.riemann(i, j, i, j) / (p.g(i, i) * p.g(j, j) - p.g(i, j) * p.g(i, j));
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("flat chart has zero curvature") {
  CatalogMetric f = flat_box();
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Vec4 x = random_point(f.charts[0], rng);
    CHECK(max_abs(riemann_at(f.charts[0], x).riemann) < 1e-8);
    CHECK(max_abs(riemann_at(without_derivatives(f.charts[0]), x).riemann) < 1e-8);
  }
}

TEST_CASE("round S4 has sectional curvature 1") {
  CatalogMetric s = round_s4();
  std::mt19937_64 rng(2);
  for (const auto& chart : s.charts) {
    for (int t = 0; t < 30; ++t) {
      PointCurvature p = riemann_at(chart, random_point(chart, rng));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) REQUIRE(sectional(p, i, j) == doctest::Approx(1.0).epsilon(1e-6));
      CurvatureDecomposition d = decompose(p.riemann, p.g, chart.orientation);
      REQUIRE(d.s == doctest::Approx(12.0).epsilon(1e-6));
      REQUIRE(d.r0_norm2 < 1e-6);
      REQUIRE(d.wplus_norm2 < 1e-6);
      REQUIRE(d.wminus_norm2 < 1e-6);
    }
  }
}

TEST_CASE("product of unit spheres") {
  CatalogMetric s = s2xs2(1.0, 1.0);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    CurvatureDecomposition d = curvature_at(s.charts[0], random_point(s.charts[0], rng));
    const Tensor4& r = d.riemann_frame;
    REQUIRE(r(0, 1, 0, 1) == doctest::Approx(1.0).epsilon(1e-6));
    REQUIRE(r(2, 3, 2, 3) == doctest::Approx(1.0).epsilon(1e-6));
    for (auto [i, j] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}}) REQUIRE(std::abs(r(i, j, i, j)) < 1e-6);
    REQUIRE(d.s == doctest::Approx(4.0).epsilon(1e-6));
    REQUIRE(d.r0_norm2 < 1e-6);
    REQUIRE(d.wplus_norm2 == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
    REQUIRE(d.wminus_norm2 == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  }
}

TEST_CASE("Fubini-Study is self-dual Kahler with s = 24") {
  CatalogMetric c = cp2_fubini_study();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    CurvatureDecomposition d = curvature_at(c.charts[0], random_point(c.charts[0], rng));
    REQUIRE(d.s == doctest::Approx(24.0).epsilon(1e-6));
    REQUIRE(std::abs(d.wplus_norm2 - 24.0) < 1e-4);
    REQUIRE(d.wminus_norm2 < 1e-4);
  }
}

TEST_CASE("property: Riemann symmetries and Weyl trace-freeness") {
  auto metrics = all_metrics();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const CatalogMetric& m = metrics[static_cast<std::size_t>(t) % metrics.size()];
    const MetricChart& chart = m.charts[static_cast<std::size_t>(t / 5) % m.charts.size()];
    Vec4 x = random_point(chart, rng);
    PointCurvature p = riemann_at(chart, x);
    const Tensor4& r = p.riemann;
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) {
            worst = std::max(worst, std::abs(r(i, j, k, l) + r(j, i, k, l)));
            worst = std::max(worst, std::abs(r(i, j, k, l) + r(i, j, l, k)));
            worst = std::max(worst, std::abs(r(i, j, k, l) - r(k, l, i, j)));
            worst = std::max(worst, std::abs(r(i, j, k, l) + r(i, k, l, j) + r(i, l, j, k)));
          }
    CAPTURE(m.name);
    REQUIRE(worst < 1e-6);
    CurvatureDecomposition d = decompose(r, p.g, chart.orientation);
    double trace = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s13 = 0.0, s14 = 0.0, s12 = 0.0;
        for (int a = 0; a < 4; ++a) {
          s13 += d.weyl_frame(a, b, a, c);
          s14 += d.weyl_frame(a, b, c, a);
          s12 += d.weyl_frame(a, a, b, c);
        }
        trace = std::max({trace, std::abs(s13), std::abs(s14), std::abs(s12)});
      }
    REQUIRE(trace < 1e-5);
    REQUIRE(std::abs(d.wplus_eigenvalues[0] + d.wplus_eigenvalues[1] + d.wplus_eigenvalues[2]) < 1e-8);
    REQUIRE(d.wplus_norm2 >= 0.0);
    REQUIRE(d.wminus_norm2 >= 0.0);
    REQUIRE(d.r0_norm2 >= 0.0);
  }
}

TEST_CASE("orientation reversal swaps W+ and W- exactly") {
  auto metrics = all_metrics();
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const MetricChart& chart = metrics[static_cast<std::size_t>(t) % metrics.size()].charts[0];
    PointCurvature p = riemann_at(chart, random_point(chart, rng));
    CurvatureDecomposition a = decompose(p.riemann, p.g, +1);
    CurvatureDecomposition b = decompose(p.riemann, p.g, -1);
    REQUIRE(a.wplus_norm2 == b.wminus_norm2);
    REQUIRE(a.wminus_norm2 == b.wplus_norm2);
  }
}

TEST_CASE("finite differences agree with exact derivatives") {
  auto metrics = all_metrics();
  std::mt19937_64 rng(7);
  for (const auto& m : metrics) {
    for (const auto& chart : m.charts) {
      MetricChart fd = without_derivatives(chart);
      for (int t = 0; t < 20; ++t) {
        Vec4 x = random_point(chart, rng);
        Tensor4 a = riemann_at(chart, x).riemann;
        Tensor4 b = riemann_at(fd, x).riemann;
        double worst = 0.0;
        for (std::size_t k = 0; k < a.c.size(); ++k) worst = std::max(worst, std::abs(a.c[k] - b.c[k]));
        CAPTURE(m.name);
        REQUIRE(worst < 1e-4);
      }
    }
  }
}

TEST_CASE("singular metrics are rejected") {
  MetricChart bad;
  bad.name = "degenerate";
  bad.domain = Box{{0, 0, 0, 0}, {1, 1, 1, 1}};
  bad.metric = [](const Vec4& x) {
    Mat4 g = Mat4::Identity();
    g(3, 3) = x[0] - 0.5;
    return g;
  };
  try {
    (void)riemann_at(bad, Vec4{0.25, 0.5, 0.5, 0.5});
    FAIL("expected SingularMetric");
  } catch (const weyl::DomainError& e) {
    CHECK(e.code() == weyl::ErrorCode::SingularMetric);
  }
  CHECK_NOTHROW((void)riemann_at(bad, Vec4{0.75, 0.5, 0.5, 0.5}));
}

TEST_CASE("integrals of the round sphere") {
  FunctionalReport r = integrate(round_s4(), 16);
  CHECK(rel(r.volume, 8.0 * kPi * kPi / 3.0) < 1e-3);
  CHECK(rel(r.int_s2 / 48.0, 8.0 * kPi * kPi) < 1e-3);
  CHECK(r.estimated_quadrature_error < 1e-3);
  IdentityResiduals id = verify_identities(r, 2, 0);
  CHECK(id.residual1 < 1e-3);
  CHECK(id.residual2 < 1e-3);
}

TEST_CASE("integrals of the product of spheres") {
  FunctionalReport r = integrate(s2xs2(1.0, 1.0), 12);
  CHECK(rel(r.int_wplus2 + r.int_s2 / 48.0, 16.0 * kPi * kPi) < 1e-3);
  CHECK(std::abs(r.int_wplus2 - r.int_wminus2) < 0.05);
  CHECK(rel(r.int_wplus2, 32.0 * kPi * kPi / 3.0) < 1e-3);
  IdentityResiduals id = verify_identities(r, 4, 0);
  CHECK(id.residual1 < 1e-3);
  FunctionalReport lop = integrate(s2xs2(0.7, 1.6), 12);
  CHECK(verify_identities(lop, 4, 0).residual1 < 1e-3);
}

TEST_CASE("integrals of Fubini-Study") {
  FunctionalReport r = integrate(cp2_fubini_study(), 16);
  CHECK(rel(r.volume, kPi * kPi / 2.0) < 1e-3);
  IdentityResiduals id = verify_identities(r, 3, 1);
  CHECK(id.residual1 < 1e-3);
  CHECK(id.residual2 < 1e-3);
  // The best positive-Yamabe bound on W+ is attained by this metric.
  weyl::Hypotheses h;
  h.yamabe_sign = weyl::YamabeSign::Positive;
  weyl::BoundResult b = weyl::best_bound(weyl::block_cp2().descriptor, h);
  CHECK(b.value->to_double() <= r.int_wplus2 * (1.0 + 1e-6));
  CHECK(rel(r.int_wplus2, b.value->to_double()) < 1e-2);
}

TEST_CASE("bounds never exceed the W+ energy of catalog metrics") {
  weyl::Hypotheses h;
  h.yamabe_sign = weyl::YamabeSign::Positive;
  struct Case {
    CatalogMetric metric;
    weyl::OrbifoldDescriptor d;
  };
  for (auto& [m, d] : {Case{round_s4(), weyl::block_s4().descriptor}, Case{s2xs2(1.0, 1.0), weyl::block_s2xs2().descriptor},
                       Case{s2xs2(0.5, 2.0), weyl::block_s2xs2().descriptor}}) {
    FunctionalReport r = integrate_once(m.charts, 12);
    for (const auto& b : weyl::enumerate_bounds(d, h)) {
      if (b.applies) REQUIRE(b.value->to_double() <= r.int_wplus2 + 1e-6);
    }
  }
}

TEST_CASE("residuals do not grow under doubling") {
  struct Case {
    CatalogMetric m;
    long long chi, tau;
  };
  for (auto& [m, chi, tau] : {Case{round_s4(), 2, 0}, Case{s2xs2(1.0, 1.0), 4, 0}, Case{cp2_fubini_study(), 3, 1}}) {
    double prev1 = 1e300, prev2 = 1e300;
    for (int n : {4, 8, 16}) {
      IdentityResiduals id = verify_identities(integrate_once(m.charts, n), chi, tau);
      CAPTURE(m.name);
      CAPTURE(n);
      CHECK(id.residual1 <= prev1 + 1e-8);
      CHECK(id.residual2 <= prev2 + 1e-8);
      prev1 = id.residual1;
      prev2 = id.residual2;
    }
  }
}

TEST_CASE("thread count does not change the report") {
  FunctionalReport a = integrate(s2xs2(0.7, 1.6), 8, 1);
  FunctionalReport b = integrate(s2xs2(0.7, 1.6), 8, 3);
  CHECK(a.int_wplus2 == b.int_wplus2);
  CHECK(a.int_s2 == b.int_s2);
  CHECK(a.volume == b.volume);
  CHECK(render_report(a) == render_report(b));
}

TEST_CASE("Kahler eigenstructure") {
  KahlerCheck c = check_kahler_eigenstructure(cp2_fubini_study(), 64);
  CHECK(c.max_deviation() < 1e-4);
  CHECK(c.last_spectrum[0] == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(c.last_spectrum[1] == doctest::Approx(-2.0).epsilon(1e-5));
  KahlerCheck s = check_kahler_eigenstructure(s2xs2(1.0, 1.0), 64);
  CHECK(s.max_deviation() < 1e-5);
  CHECK(s.last_spectrum[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
  KahlerCheck r = check_kahler_eigenstructure(round_s4(), 64);
  CHECK(r.max_deviation() < 1e-6);
}

TEST_CASE("catalog lookup by name") {
  CHECK(catalog_metric("s4").name == round_s4().name);
  CHECK(catalog_metric("s2xs2(2,3)").scalar_curvature.value() == doctest::Approx(2.0 / 4 + 2.0 / 9));
  CHECK(catalog_metric("cp2-fs").kahler);
  CHECK_THROWS_AS((void)catalog_metric("rp4"), std::invalid_argument);
  CHECK_THROWS_AS((void)catalog_metric("s2xs2(1,-1)"), std::invalid_argument);
}
