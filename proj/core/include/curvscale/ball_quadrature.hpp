#ifndef CURVSCALE_BALL_QUADRATURE_HPP
#define CURVSCALE_BALL_QUADRATURE_HPP

#include <vector>

#include "curvscale/types.hpp"

namespace curvscale {

/// Nodes and weights averaging over the unit ball: weights sum to 1 and the
/// rule reproduces ball averages of polynomials up to the stated order.
struct QuadratureRule {
  std::vector<Vec> nodes;
  std::vector<double> weights;

  template <class F>
  double average(F&& f) const {
    double s = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights);

/// Tensor rule: Gauss-Legendre in radius (with the r^{n-1} Jacobian folded
/// into the weights) times an equal-weight angular design exact to the
/// required spherical order (n=2 uniform angles, n=3 product Gauss).
QuadratureRule ball_quadrature(int n, int order);

}  // namespace curvscale

#endif
