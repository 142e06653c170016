#pragma once

#include <vector>

namespace gkc {

/// Nodes and weights for integrating f(x) e^(-x^2) dx over the real line.
/// Nodes are sorted ascending and symmetric about 0; weights sum to sqrt(pi).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction: eigen-decomposition of the symmetric
/// tridiagonal Jacobi matrix with off-diagonal sqrt(i/2).
/// Exact for polynomials of degree <= 2*order - 1.
GaussHermiteRule gauss_hermite(int order);

}  // namespace gkc
