#include "weyl/curvature/metric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace weyl::curvature {

namespace {

constexpr double kPi = std::numbers::pi;

template <class T>
Sym4<T> conformally_flat(const std::array<T, 4>& x) {
  T r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  T psi = T(2.0) / (T(1.0) + r2);
  T psi2 = psi * psi;
  return {psi2, T(0.0), T(0.0), T(0.0), psi2, T(0.0), T(0.0), psi2, T(0.0), psi2};
}

template <class T>
std::vector<T> sphere_embedding(const std::array<T, 4>& x, double pole) {
  T r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  T inv = T(1.0) / (T(1.0) + r2);
  std::vector<T> y;
  for (int i = 0; i < 4; ++i) y.push_back(T(2.0) * x[i] * inv);
  y.push_back(T(pole) * (T(1.0) - r2) * inv);
  return y;
}

}  // namespace

Mat4 unpack(const Sym4<double>& s) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = s[sym_index(i, j)];
  }
  return m;
}

CatalogMetric round_s4() {
  CatalogMetric m;
  m.name = "s4";
  m.euler = 2;
  m.signature = 0;
  m.scalar_curvature = 12.0;
  // Stereographic charts from both poles, each covering a closed hemisphere.
  // The inversion relating them reverses orientation.
  for (int k = 0; k < 2; ++k) {
    MetricChart c;
    c.name = k == 0 ? "s4/north" : "s4/south";
    c.domain = Ball{1.0, RadialMap::Linear};
    c.orientation = k == 0 ? +1 : -1;
    double pole = k == 0 ? 1.0 : -1.0;
    attach_metric(c, [](const auto& x) { return conformally_flat(x); });
    attach_embedding(c, [pole](const auto& x) { return sphere_embedding(x, pole); });
    m.charts.push_back(std::move(c));
  }
  return m;
}

CatalogMetric s2xs2(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("s2xs2 radii must be positive");
  CatalogMetric m;
  std::ostringstream name;
  name << "s2xs2(" << a << "," << b << ")";
  m.name = name.str();
  m.euler = 4;
  m.signature = 0;
  m.kahler = true;
  m.scalar_curvature = 2.0 / (a * a) + 2.0 / (b * b);
  MetricChart c;
  c.name = "s2xs2/angles";
  c.domain = Box{{0.0, 0.0, 0.0, 0.0}, {kPi, 2.0 * kPi, kPi, 2.0 * kPi}};
  c.coordinate_scale = kPi;
  double a2 = a * a, b2 = b * b;
  attach_metric(c, [a2, b2](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    using std::sin;
    T s1 = sin(x[0]), s2 = sin(x[2]);
    return Sym4<T>{T(a2), T(0.0), T(0.0), T(0.0), T(a2) * s1 * s1, T(0.0), T(0.0), T(b2), T(0.0), T(b2) * s2 * s2};
  });
  attach_embedding(c, [](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    using std::cos;
    using std::sin;
    std::vector<T> y;
    for (int f = 0; f < 2; ++f) {
      T th = x[2 * f], ph = x[2 * f + 1];
      y.push_back(sin(th) * cos(ph));
      y.push_back(sin(th) * sin(ph));
      y.push_back(cos(th));
    }
    return y;
  });
  m.charts.push_back(std::move(c));
  return m;
}

CatalogMetric cp2_fubini_study(double cutoff) {
  CatalogMetric m;
  m.name = "cp2-fs";
  m.euler = 3;
  m.signature = 1;
  m.kahler = true;
  m.scalar_curvature = 24.0;
  MetricChart c;
  c.name = "cp2/affine";
  c.domain = Ball{cutoff, RadialMap::Tangent};
  // Coordinates (x1, x2, y1, y2) with z_j = x_j + i y_j; this ordering is
  // opposite to the complex orientation.
  c.orientation = -1;
  double u = 1.0 + cutoff * cutoff;
  c.tail_volume = kPi * kPi * (1.0 / u - 1.0 / (2.0 * u * u));
  c.coordinate_scale = 1.0;
  attach_metric(c, [](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    const T& x1 = x[0];
    const T& x2 = x[1];
    const T& y1 = x[2];
    const T& y2 = x[3];
    T q = T(1.0) + x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2;
    T inv = T(1.0) / q;
    T inv2 = inv * inv;
    // Hermitian matrix h = A + iB of the Kahler potential log(1 + |z|^2).
    T a00 = inv - (x1 * x1 + y1 * y1) * inv2;
    T a11 = inv - (x2 * x2 + y2 * y2) * inv2;
    T a01 = -(x1 * x2 + y1 * y2) * inv2;
    T b01 = -(x1 * y2 - y1 * x2) * inv2;
    return Sym4<T>{a00, a01, T(0.0), b01, a11, -b01, T(0.0), a00, a01, a11};
  });
  attach_embedding(c, [](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    const T& x1 = x[0];
    const T& x2 = x[1];
    const T& y1 = x[2];
    const T& y2 = x[3];
    T inv = T(1.0) / (T(1.0) + x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2);
    // Hermitian projector onto the line [1 : z1 : z2].
    return std::vector<T>{inv,
                          (x1 * x1 + y1 * y1) * inv,
                          (x2 * x2 + y2 * y2) * inv,
                          x1 * inv,
                          -y1 * inv,
                          x2 * inv,
                          -y2 * inv,
                          (x1 * x2 + y1 * y2) * inv,
                          (y1 * x2 - x1 * y2) * inv};
  });
  m.charts.push_back(std::move(c));
  return m;
}

CatalogMetric flat_box() {
  CatalogMetric m;
  m.name = "flat-box";
  m.euler = 0;
  m.signature = 0;
  m.scalar_curvature = 0.0;
  MetricChart c;
  c.name = "flat-box/unit";
  c.domain = Box{{0.0, 0.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}};
  attach_metric(c, [](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    return Sym4<T>{T(1.0), T(0.0), T(0.0), T(0.0), T(1.0), T(0.0), T(0.0), T(1.0), T(0.0), T(1.0)};
  });
  // Opposite faces are identified, so this is the flat torus.
  attach_embedding(c, [](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    using std::cos;
    using std::sin;
    std::vector<T> y;
    for (int i = 0; i < 4; ++i) {
      y.push_back(cos(T(2.0 * kPi) * x[i]));
      y.push_back(sin(T(2.0 * kPi) * x[i]));
    }
    return y;
  });
  m.charts.push_back(std::move(c));
  return m;
}

CatalogMetric catalog_metric(std::string_view name) {
  if (name == "s4") return round_s4();
  if (name == "cp2-fs") return cp2_fubini_study();
  if (name == "flat-box") return flat_box();
  if (name.starts_with("s2xs2")) {
    auto rest = name.substr(5);
    if (rest.empty()) return s2xs2(1.0, 1.0);
    if (rest.front() == '(' && rest.back() == ')') {
      std::string body(rest.substr(1, rest.size() - 2));
      auto comma = body.find(',');
      if (comma != std::string::npos) {
        std::size_t used_a = 0, used_b = 0;
        std::string sa = body.substr(0, comma), sb = body.substr(comma + 1);
        double a = 0.0, b = 0.0;
        try {
          a = std::stod(sa, &used_a);
          b = std::stod(sb, &used_b);
        } catch (const std::logic_error&) {
          used_a = 0;
        }
        if (used_a > 0 && used_a == sa.size() && used_b == sb.size()) return s2xs2(a, b);
      }
    }
  }
  throw std::invalid_argument("unknown metric '" + std::string(name) +
                              "' (expected s4, s2xs2(a,b), cp2-fs or flat-box)");
}

MetricChart without_derivatives(MetricChart chart) {
  chart.derivatives = nullptr;
  return chart;
}

}  // namespace weyl::curvature
