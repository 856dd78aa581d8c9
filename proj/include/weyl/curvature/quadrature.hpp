#pragma once

#include <vector>

namespace weyl::curvature {

struct GaussRule {
  std::vector<double> nodes;    ///< on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n from Chebyshev
/// guesses), exact for polynomials of degree 2n - 1.
GaussRule gauss_legendre(int n);

/// The same rule mapped to [a, b].
GaussRule gauss_legendre(int n, double a, double b);

}  // namespace weyl::curvature
