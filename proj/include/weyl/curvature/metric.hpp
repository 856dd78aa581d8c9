#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "weyl/curvature/jet.hpp"

namespace weyl::curvature {

using Vec4 = std::array<double, 4>;
using Mat4 = Eigen::Matrix4d;

/// Packed symmetric 4x4 matrix, order (00 01 02 03 11 12 13 22 23 33).
template <class T>
using Sym4 = std::array<T, 10>;

Mat4 unpack(const Sym4<double>& s);

/// g, dg[k](i,j) = d_k g_ij and ddg[k][l](i,j) = d_k d_l g_ij.
struct MetricDerivatives {
  Mat4 g;
  std::array<Mat4, 4> dg;
  std::array<std::array<Mat4, 4>, 4> ddg;
};

/// Coordinate box [lo_i, hi_i].
struct Box {
  Vec4 lo, hi;
};

enum class RadialMap {
  Linear,   ///< r = R u
  Tangent,  ///< r = tan(u atan R), for metrics decaying at infinity
};

/// Euclidean ball of the given radius, integrated in hyperspherical
/// coordinates (r, a1, a2, phi).
struct Ball {
  double radius = 1.0;
  RadialMap map = RadialMap::Linear;
};

using Domain = std::variant<Box, Ball>;

/// Values and Jacobian (rows: embedding coordinates) of a map into R^m.
struct EmbeddingValue {
  std::vector<double> y;
  std::vector<Vec4> dy;
};

struct MetricChart {
  std::string name;
  Domain domain;
  std::function<Mat4(const Vec4&)> metric;
  /// Exact derivatives; when empty, central differences are used.
  std::function<MetricDerivatives(const Vec4&)> derivatives;
  /// Global coordinates of the point, shared by all charts of a space.
  std::function<EmbeddingValue(const Vec4&)> embedding;
  int orientation = +1;
  double multiplicity = 1.0;
  /// Volume outside a ball domain; the integrands there are estimated by
  /// their values on the cutoff sphere.
  double tail_volume = 0.0;
  double coordinate_scale = 1.0;
};

/// Builds metric and exact-derivative callbacks from a generic lambda
/// `f(const std::array<T, 4>&) -> Sym4<T>`.
template <class F>
void attach_metric(MetricChart& chart, F f) {
  chart.metric = [f](const Vec4& x) { return unpack(f(x)); };
  chart.derivatives = [f](const Vec4& x) {
    std::array<Jet, 4> xj;
    for (int i = 0; i < 4; ++i) xj[i] = Jet::variable(x[i], i);
    Sym4<Jet> gj = f(xj);
    MetricDerivatives out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Jet& c = gj[sym_index(i, j)];
        out.g(i, j) = c.v;
        for (int k = 0; k < 4; ++k) {
          out.dg[k](i, j) = c.d[k];
          for (int l = 0; l < 4; ++l) out.ddg[k][l](i, j) = c.hess(k, l);
        }
      }
    }
    return out;
  };
}

/// Same for an embedding `f(const std::array<T, 4>&) -> std::vector<T>`.
template <class F>
void attach_embedding(MetricChart& chart, F f) {
  chart.embedding = [f](const Vec4& x) {
    std::array<Jet, 4> xj;
    for (int i = 0; i < 4; ++i) xj[i] = Jet::variable(x[i], i);
    auto yj = f(xj);
    EmbeddingValue e;
    e.y.reserve(yj.size());
    e.dy.reserve(yj.size());
    for (const Jet& c : yj) {
      e.y.push_back(c.v);
      e.dy.push_back(c.d);
    }
    return e;
  };
}

/// A closed 4-manifold as a list of charts, with its topology and what the
/// metric is known to be.
struct CatalogMetric {
  std::string name;
  std::vector<MetricChart> charts;
  long long euler = 0;
  long long signature = 0;
  bool closed = true;
  bool kahler = false;
  std::optional<double> scalar_curvature;  ///< when constant
};

/// "s4", "s2xs2(a,b)" (radii a, b > 0), "cp2-fs", "flat-box".
/// Throws std::invalid_argument for unknown names.
CatalogMetric catalog_metric(std::string_view name);

CatalogMetric round_s4();
CatalogMetric s2xs2(double a, double b);
/// Fubini-Study, normalized to scalar curvature 24, on the affine chart C^2.
CatalogMetric cp2_fubini_study(double cutoff = 1414.0);
CatalogMetric flat_box();

/// Strip the exact derivatives so that curvature falls back to finite
/// differences.
MetricChart without_derivatives(MetricChart chart);

}  // namespace weyl::curvature
