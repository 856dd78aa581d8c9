#include "weyl/curvature/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "weyl/errors.hpp"

namespace weyl::curvature {

namespace {

void require_positive_definite(const Mat4& g, const Vec4& x) {
  Eigen::LLT<Mat4> llt(g);
  bool ok = llt.info() == Eigen::Success && (g - g.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * g.cwiseAbs().maxCoeff();
  if (ok) {
    for (int i = 0; i < 4; ++i) ok = ok && llt.matrixL()(i, i) > 0.0;
  }
  if (!ok) {
    throw DomainError(ErrorCode::SingularMetric, "metric is not symmetric positive definite at (" +
                                                     std::to_string(x[0]) + ", " + std::to_string(x[1]) + ", " +
                                                     std::to_string(x[2]) + ", " + std::to_string(x[3]) + ")");
  }
}

// Contracts index `slot` of t with the columns of e.
Tensor4 transform_slot(const Tensor4& t, const Mat4& e, int slot) {
  Tensor4 out;
  std::array<int, 4> idx{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          idx = {a, b, c, d};
          double sum = 0.0;
          for (int i = 0; i < 4; ++i) {
            std::array<int, 4> src = idx;
            src[slot] = i;
            sum += t(src[0], src[1], src[2], src[3]) * e(i, idx[slot]);
          }
          out(a, b, c, d) = sum;
        }
      }
    }
  }
  return out;
}

double kulkarni_nomizu(const Mat4& h, const Mat4& k, int a, int b, int c, int d) {
  return h(a, c) * k(b, d) + h(b, d) * k(a, c) - h(a, d) * k(b, c) - h(b, c) * k(a, d);
}

constexpr std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Columns: orthonormal basis of the 2-forms with *w = sigma w, expressed in
// the basis e_ab (a < b) ordered as kPairs.
Eigen::Matrix<double, 6, 3> two_form_basis(int sigma) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<double, 6, 3> b = Eigen::Matrix<double, 6, 3>::Zero();
  b(0, 0) = r;                 // e01
  b(5, 0) = sigma * r;         // e23
  b(1, 1) = r;                 // e02
  b(4, 1) = -sigma * r;        // e13
  b(2, 2) = r;                 // e03
  b(3, 2) = sigma * r;         // e12
  return b;
}

std::array<double, 3> descending_eigenvalues(const Mat3& m) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(m, Eigen::EigenvaluesOnly);
  auto ev = es.eigenvalues();
  return {ev(2), ev(1), ev(0)};
}

}  // namespace

Tensor4 riemann_from_derivatives(const MetricDerivatives& d) {
  const Mat4 ginv = d.g.inverse();
  // gamma_low[p][k](l) = Gamma_{p,kl}, gamma_up[n][k](l) = Gamma^n_{kl}.
  std::array<Mat4, 4> gamma_low, gamma_up;
  for (int p = 0; p < 4; ++p) {
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        gamma_low[p](k, l) = 0.5 * (d.dg[k](p, l) + d.dg[l](p, k) - d.dg[p](k, l));
      }
    }
  }
  for (int n = 0; n < 4; ++n) {
    gamma_up[n].setZero();
    for (int p = 0; p < 4; ++p) gamma_up[n] += ginv(n, p) * gamma_low[p];
  }
  Tensor4 r;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        for (int m = 0; m < 4; ++m) {
          double v = 0.5 * (d.ddg[k][l](i, m) + d.ddg[i][m](k, l) - d.ddg[k][m](i, l) - d.ddg[i][l](k, m));
          for (int p = 0; p < 4; ++p) {
            v += gamma_low[p](k, l) * gamma_up[p](i, m) - gamma_low[p](k, m) * gamma_up[p](i, l);
          }
          r(i, k, l, m) = v;
        }
      }
    }
  }
  return r;
}

MetricDerivatives finite_difference_derivatives(const MetricChart& chart, const Vec4& x) {
  double xmax = 0.0;
  for (double v : x) xmax = std::max(xmax, std::abs(v));
  const double h = 1e-5 * std::max({1.0, xmax, chart.coordinate_scale});
  auto at = [&](int i, double si, int j, double sj) {
    Vec4 y = x;
    if (i >= 0) y[i] += si * h;
    if (j >= 0) y[j] += sj * h;
    return chart.metric(y);
  };
  MetricDerivatives d;
  d.g = chart.metric(x);
  for (int k = 0; k < 4; ++k) {
    d.dg[k] = (at(k, 1, -1, 0) - at(k, -1, -1, 0)) / (2.0 * h);
  }
  for (int k = 0; k < 4; ++k) {
    d.ddg[k][k] = (at(k, 1, -1, 0) - 2.0 * d.g + at(k, -1, -1, 0)) / (h * h);
    for (int l = k + 1; l < 4; ++l) {
      Mat4 v = (at(k, 1, l, 1) - at(k, 1, l, -1) - at(k, -1, l, 1) + at(k, -1, l, -1)) / (4.0 * h * h);
      d.ddg[k][l] = v;
      d.ddg[l][k] = v;
    }
  }
  return d;
}

PointCurvature riemann_at(const MetricChart& chart, const Vec4& x) {
  MetricDerivatives d = chart.derivatives ? chart.derivatives(x) : finite_difference_derivatives(chart, x);
  require_positive_definite(d.g, x);
  return {d.g, riemann_from_derivatives(d)};
}

CurvatureDecomposition decompose(const Tensor4& riemann, const Mat4& g, int orientation) {
  Eigen::LLT<Mat4> llt(g);
  if (llt.info() != Eigen::Success) throw DomainError(ErrorCode::SingularMetric, "metric is not positive definite");
  const Mat4 lower = llt.matrixL();
  // Columns of e are a g-orthonormal frame with the coordinate orientation.
  const Mat4 e = lower.transpose().triangularView<Eigen::Upper>().solve(Mat4::Identity());

  CurvatureDecomposition out;
  Tensor4 rf = riemann;
  for (int slot = 0; slot < 4; ++slot) rf = transform_slot(rf, e, slot);
  out.riemann_frame = rf;

  Mat4 ric = Mat4::Zero();
  for (int b = 0; b < 4; ++b) {
    for (int d = 0; d < 4; ++d) {
      for (int a = 0; a < 4; ++a) ric(b, d) += rf(a, b, a, d);
    }
  }
  ric = 0.5 * (ric + ric.transpose()).eval();
  out.s = ric.trace();
  const Mat4 delta = Mat4::Identity();
  const Mat4 r0 = ric - (out.s / 4.0) * delta;
  out.r0_norm2 = r0.squaredNorm();
  out.ricci = lower * ric * lower.transpose();

  Tensor4 w;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          w(a, b, c, d) = rf(a, b, c, d) - 0.5 * kulkarni_nomizu(r0, delta, a, b, c, d) -
                          (out.s / 24.0) * kulkarni_nomizu(delta, delta, a, b, c, d);
        }
      }
    }
  }
  out.weyl_frame = w;

  Eigen::Matrix<double, 6, 6> op;
  for (int p = 0; p < 6; ++p) {
    for (int q = 0; q < 6; ++q) op(p, q) = w(kPairs[p][0], kPairs[p][1], kPairs[q][0], kPairs[q][1]);
  }
  op = 0.5 * (op + op.transpose()).eval();
  const int sigma = orientation >= 0 ? +1 : -1;
  auto block = [&](int sg) -> Mat3 {
    auto b = two_form_basis(sg);
    return b.transpose() * op * b;
  };
  out.wplus = block(sigma);
  out.wminus = block(-sigma);
  out.wplus_norm2 = out.wplus.squaredNorm();
  out.wminus_norm2 = out.wminus.squaredNorm();
  out.wplus_eigenvalues = descending_eigenvalues(out.wplus);
  out.wminus_eigenvalues = descending_eigenvalues(out.wminus);
  return out;
}

CurvatureDecomposition curvature_at(const MetricChart& chart, const Vec4& x) {
  PointCurvature pc = riemann_at(chart, x);
  return decompose(pc.riemann, pc.g, chart.orientation);
}

}  // namespace weyl::curvature
