#pragma once

#include <optional>
#include <vector>

#include "weyl/curvature/metric.hpp"

namespace weyl::curvature {

/// Start from f = 1 + amplitude * y_index, y the chart embedding.
struct Perturbation {
  int index = 0;
  double amplitude = 0.0;
};

struct YamabeOptions {
  int resolution = 12;
  int step_count = 200;
  double learning_rate = 0.1;
  double tolerance = 1e-7;
  std::optional<Perturbation> start;
};

struct YamabeResult {
  double estimate = 0.0;
  double initial_value = 0.0;
  std::vector<double> history;  ///< functional value after each accepted step, starting value first
  int steps = 0;
  bool stationary = false;  ///< no descent direction found at the final iterate
};

/// Y_g(f) = int(6|df|^2 + s f^2) / (int f^4)^(1/2) minimised over f in the
/// span of polynomials of degree <= 2 in the embedding coordinates, by
/// normalised gradient descent with backtracking. Steps that drive f below
/// 1e-6 at any quadrature node are rejected.
/// Throws DomainError(NonConvergence) when the last relative decrease still
/// exceeds the tolerance after step_count steps.
YamabeResult yamabe_descent(const CatalogMetric& metric, const YamabeOptions& options = {});

/// Y_g(1) = int s / Vol^(1/2) by the same quadrature.
double yamabe_of_constant(const CatalogMetric& metric, int resolution = 12);

}  // namespace weyl::curvature
