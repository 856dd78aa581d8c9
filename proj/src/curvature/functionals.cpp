#include "weyl/curvature/functionals.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "weyl/curvature/quadrature.hpp"

namespace weyl::curvature {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sums {
  double volume = 0.0, s2 = 0.0, r0 = 0.0, wp = 0.0, wm = 0.0;

  void add(double w, const CurvatureDecomposition& d) {
    volume += w;
    s2 += w * d.s * d.s;
    r0 += w * d.r0_norm2;
    wp += w * d.wplus_norm2;
    wm += w * d.wminus_norm2;
  }
  void add(const Sums& o) {
    volume += o.volume;
    s2 += o.s2;
    r0 += o.r0;
    wp += o.wp;
    wm += o.wm;
  }
};

Sums integrate_block(const MetricChart& chart, const std::vector<QuadratureNode>& nodes, std::size_t begin,
                     std::size_t end) {
  Sums s;
  for (std::size_t k = begin; k < end; ++k) {
    const auto& node = nodes[k];
    PointCurvature pc = riemann_at(chart, node.x);
    CurvatureDecomposition d = decompose(pc.riemann, pc.g, chart.orientation);
    s.add(node.weight * std::sqrt(pc.g.determinant()), d);
  }
  return s;
}

Sums tail_sums(const MetricChart& chart) {
  Sums s;
  const auto* ball = std::get_if<Ball>(&chart.domain);
  if (ball == nullptr || chart.tail_volume <= 0.0) return s;
  CurvatureDecomposition d = curvature_at(chart, Vec4{ball->radius, 0.0, 0.0, 0.0});
  s.add(chart.tail_volume * chart.multiplicity, d);
  return s;
}

}  // namespace

std::vector<QuadratureNode> chart_nodes(const MetricChart& chart, int n) {
  std::vector<QuadratureNode> out;
  out.reserve(static_cast<std::size_t>(n) * n * n * n);
  if (const auto* box = std::get_if<Box>(&chart.domain)) {
    std::array<GaussRule, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = gauss_legendre(n, box->lo[i], box->hi[i]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            out.push_back({{r[0].nodes[a], r[1].nodes[b], r[2].nodes[c], r[3].nodes[d]},
                           chart.multiplicity * r[0].weights[a] * r[1].weights[b] * r[2].weights[c] *
                               r[3].weights[d]});
    return out;
  }
  const auto& ball = std::get<Ball>(chart.domain);
  GaussRule ru = gauss_legendre(n, 0.0, 1.0);
  GaussRule ra = gauss_legendre(n, 0.0, kPi);
  GaussRule rp = gauss_legendre(n, 0.0, 2.0 * kPi);
  const double t = std::atan(ball.radius);
  for (int a = 0; a < n; ++a) {
    double u = ru.nodes[a];
    double r = 0.0, dr = 0.0;
    if (ball.map == RadialMap::Linear) {
      r = ball.radius * u;
      dr = ball.radius;
    } else {
      r = std::tan(u * t);
      dr = t * (1.0 + r * r);
    }
    for (int b = 0; b < n; ++b) {
      double a1 = ra.nodes[b], s1 = std::sin(a1), c1 = std::cos(a1);
      for (int c = 0; c < n; ++c) {
        double a2 = ra.nodes[c], s2 = std::sin(a2), c2 = std::cos(a2);
        for (int d = 0; d < n; ++d) {
          double ph = rp.nodes[d];
          Vec4 x{r * c1, r * s1 * c2, r * s1 * s2 * std::cos(ph), r * s1 * s2 * std::sin(ph)};
          double jac = r * r * r * s1 * s1 * s2 * dr;
          out.push_back({x, chart.multiplicity * jac * ru.weights[a] * ra.weights[b] * ra.weights[c] * rp.weights[d]});
        }
      }
    }
  }
  return out;
}

namespace {

FunctionalReport integrate_impl(const std::vector<MetricChart>& charts, int resolution, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  Sums total;
  const std::size_t n = static_cast<std::size_t>(resolution);
  for (const auto& chart : charts) {
    std::vector<QuadratureNode> nodes = chart_nodes(chart, resolution);
    const std::size_t block = n * n * n;
    std::vector<Sums> partial(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < n; i = next++) {
        partial[i] = integrate_block(chart, nodes, i * block, (i + 1) * block);
      }
    };
    unsigned used = std::min<unsigned>(threads, static_cast<unsigned>(n));
    if (used <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < used; ++t) pool.emplace_back(worker);
    }
    for (const auto& p : partial) total.add(p);
    total.add(tail_sums(chart));
  }
  FunctionalReport r;
  r.volume = total.volume;
  r.int_s2 = total.s2;
  r.int_r0_norm2 = total.r0;
  r.int_wplus2 = total.wp;
  r.int_wminus2 = total.wm;
  r.resolution = resolution;
  return r;
}

}  // namespace

FunctionalReport integrate_once(const std::vector<MetricChart>& charts, int resolution) {
  return integrate_impl(charts, resolution, 0);
}

FunctionalReport integrate(const std::vector<MetricChart>& charts, int resolution, unsigned threads) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  FunctionalReport hi = integrate_impl(charts, resolution, threads);
  FunctionalReport lo = integrate_impl(charts, resolution / 2, threads);
  hi.estimated_quadrature_error =
      std::max({std::abs(hi.volume - lo.volume), std::abs(hi.int_s2 - lo.int_s2),
                std::abs(hi.int_r0_norm2 - lo.int_r0_norm2), std::abs(hi.int_wplus2 - lo.int_wplus2),
                std::abs(hi.int_wminus2 - lo.int_wminus2)});
  return hi;
}

FunctionalReport integrate(const CatalogMetric& metric, int resolution, unsigned threads) {
  return integrate(metric.charts, resolution, threads);
}

std::string render_report(const FunctionalReport& r) {
  std::ostringstream os;
  os.precision(12);
  os << "estimated_quadrature_error = " << r.estimated_quadrature_error << '\n'
     << "int_r0_norm2 = " << r.int_r0_norm2 << '\n'
     << "int_s2 = " << r.int_s2 << '\n'
     << "int_wminus2 = " << r.int_wminus2 << '\n'
     << "int_wplus2 = " << r.int_wplus2 << '\n'
     << "resolution = " << r.resolution << '\n'
     << "volume = " << r.volume << '\n';
  return os.str();
}

IdentityResiduals verify_identities(const FunctionalReport& report, long long chi, long long tau) {
  IdentityResiduals out;
  out.gauss_bonnet_target = 2.0 * kPi * kPi * static_cast<double>(2 * chi + 3 * tau);
  out.signature_target = 12.0 * kPi * kPi * static_cast<double>(tau);
  double gb = report.int_wplus2 + report.int_s2 / 48.0 - report.int_r0_norm2 / 4.0;
  double sig = report.int_wplus2 - report.int_wminus2;
  out.residual1 = std::abs(gb - out.gauss_bonnet_target) / (1.0 + std::abs(out.gauss_bonnet_target));
  out.residual2 = std::abs(sig - out.signature_target) / (1.0 + std::abs(out.signature_target));
  return out;
}

KahlerCheck check_kahler_eigenstructure(const CatalogMetric& metric, int sample_count, std::uint64_t seed) {
  KahlerCheck out;
  std::mt19937_64 rng(seed);
  const double c = std::sqrt(6.0) / 18.0;
  for (int k = 0; k < sample_count; ++k) {
    const auto& chart = metric.charts[static_cast<std::size_t>(k) % metric.charts.size()];
    CurvatureDecomposition d = curvature_at(chart, random_point(chart, rng));
    std::array<double, 3> expect{};
    if (metric.kahler) expect = {d.s / 6.0, -d.s / 12.0, -d.s / 12.0};
    for (int i = 0; i < 3; ++i) {
      out.max_spectrum_deviation =
          std::max(out.max_spectrum_deviation, std::abs(d.wplus_eigenvalues[i] - expect[i]));
    }
    double norm = std::sqrt(d.wplus_norm2);
    out.max_det_deviation = std::max(out.max_det_deviation, std::abs(d.wplus.determinant() - c * norm * norm * norm));
    out.last_spectrum = d.wplus_eigenvalues;
    out.last_scalar = d.s;
    ++out.samples;
  }
  return out;
}

}  // namespace weyl::curvature
