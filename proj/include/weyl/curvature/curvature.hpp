#pragma once

// Curvature conventions.
//
//   R_ijkl has R_ijij = K (g_ii g_jj - g_ij^2) for sectional curvature K,
//   Ric_jl = g^ik R_ijkl, s = g^jl Ric_jl, r0 = Ric - (s/4) g,
//   W = R - (1/2) r0 (.) g - (s/24) g (.) g   ((.) Kulkarni-Nomizu),
//   |W|^2 = (1/4) W_ijkl W^ijkl, |r0|^2 = r0_ij r0^ij.
//
// Frame quantities use the orthonormal frame from the Cholesky factor of g.
// W+ and W- are the 3x3 blocks of the Weyl operator on the self-dual and
// anti-self-dual 2-forms for the chart orientation, so |W+|^2 is the squared
// Frobenius norm of its block and the eigenvalues have trace zero.

#include <array>

#include "weyl/curvature/metric.hpp"

namespace weyl::curvature {

/// Fully covariant 4-index tensor, index (((i*4+j)*4+k)*4+l).
struct Tensor4 {
  std::array<double, 256> c{};
  double& operator()(int i, int j, int k, int l) { return c[((i * 4 + j) * 4 + k) * 4 + l]; }
  double operator()(int i, int j, int k, int l) const { return c[((i * 4 + j) * 4 + k) * 4 + l]; }
};

struct PointCurvature {
  Mat4 g;
  Tensor4 riemann;  ///< coordinate components
};

/// Exact derivatives when the chart has them, otherwise central differences
/// with step 1e-5 * max(1, |x|_inf, coordinate_scale).
/// Throws DomainError(SingularMetric) when g is not positive definite.
PointCurvature riemann_at(const MetricChart& chart, const Vec4& x);

/// Riemann tensor of g from its first and second derivatives.
Tensor4 riemann_from_derivatives(const MetricDerivatives& d);

MetricDerivatives finite_difference_derivatives(const MetricChart& chart, const Vec4& x);

using Mat3 = Eigen::Matrix3d;

struct CurvatureDecomposition {
  double s = 0.0;
  Mat4 ricci;  ///< coordinate components
  double r0_norm2 = 0.0;
  double wplus_norm2 = 0.0;
  double wminus_norm2 = 0.0;
  std::array<double, 3> wplus_eigenvalues{};   ///< descending
  std::array<double, 3> wminus_eigenvalues{};  ///< descending
  Mat3 wplus, wminus;
  Tensor4 weyl_frame;     ///< Weyl tensor in the orthonormal frame
  Tensor4 riemann_frame;  ///< Riemann tensor in the orthonormal frame
};

/// orientation = +1 when the coordinate order is positively oriented.
CurvatureDecomposition decompose(const Tensor4& riemann, const Mat4& g, int orientation);

/// Convenience: riemann_at then decompose with the chart orientation.
CurvatureDecomposition curvature_at(const MetricChart& chart, const Vec4& x);

}  // namespace weyl::curvature
