#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "weyl/curvature/curvature.hpp"

namespace weyl::curvature {

struct FunctionalReport {
  double volume = 0.0;
  double int_s2 = 0.0;
  double int_r0_norm2 = 0.0;
  double int_wplus2 = 0.0;
  double int_wminus2 = 0.0;
  int resolution = 0;
  /// Largest change of any integral between resolution and resolution / 2.
  double estimated_quadrature_error = 0.0;
};

/// One quadrature node of a chart: coordinates and the weight
/// sqrt(det g) * jacobian * multiplicity (the metric factor is filled in by
/// the caller).
struct QuadratureNode {
  Vec4 x;
  double weight;
};

/// Nodes of the tensor Gauss-Legendre rule with n points per direction,
/// carrying only the coordinate jacobian and the chart multiplicity.
std::vector<QuadratureNode> chart_nodes(const MetricChart& chart, int n);

/// Integrals at one resolution, without the error estimate.
FunctionalReport integrate_once(const std::vector<MetricChart>& charts, int resolution);

/// Integrals at `resolution`, with the error estimated against
/// resolution / 2. Work is split over the first quadrature index and summed
/// in a fixed order, so results do not depend on the thread count.
FunctionalReport integrate(const std::vector<MetricChart>& charts, int resolution, unsigned threads = 0);
FunctionalReport integrate(const CatalogMetric& metric, int resolution, unsigned threads = 0);

/// key = value lines.
std::string render_report(const FunctionalReport& r);

struct IdentityResiduals {
  double gauss_bonnet_target = 0.0;  ///< 2 pi^2 (2 chi + 3 tau)
  double signature_target = 0.0;     ///< 12 pi^2 tau
  double residual1 = 0.0;
  double residual2 = 0.0;
};

IdentityResiduals verify_identities(const FunctionalReport& report, long long chi, long long tau);

struct KahlerCheck {
  int samples = 0;
  double max_spectrum_deviation = 0.0;  ///< against (s/6, -s/12, -s/12), or 0 if not Kahler
  double max_det_deviation = 0.0;       ///< |det W+ - (sqrt 6 / 18) |W+|^3|
  std::array<double, 3> last_spectrum{};
  double last_scalar = 0.0;
  double max_deviation() const { return std::max(max_spectrum_deviation, max_det_deviation); }
};

/// Samples uniformly random interior points of every chart.
KahlerCheck check_kahler_eigenstructure(const CatalogMetric& metric, int sample_count, std::uint64_t seed = 1);

/// Uniformly random interior point of the chart's domain (balls are sampled
/// inside min(radius, 10)).
template <class Rng>
Vec4 random_point(const MetricChart& chart, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec4 x{};
  if (const auto* box = std::get_if<Box>(&chart.domain)) {
    for (int i = 0; i < 4; ++i) {
      double span = box->hi[i] - box->lo[i];
      x[i] = box->lo[i] + span * (0.02 + 0.96 * u(rng));
    }
    return x;
  }
  const auto& ball = std::get<Ball>(chart.domain);
  double r = std::min(ball.radius, 10.0) * 0.98;
  for (;;) {
    double n2 = 0.0;
    for (int i = 0; i < 4; ++i) {
      x[i] = r * (2.0 * u(rng) - 1.0);
      n2 += x[i] * x[i];
    }
    if (n2 < r * r) return x;
  }
}

}  // namespace weyl::curvature
