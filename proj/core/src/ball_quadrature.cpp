#include "curvscale/ball_quadrature.hpp"

#include <cmath>

#include "curvscale/errors.hpp"

namespace curvscale {

void gauss_legendre(int k, std::vector<double>& nodes, std::vector<double>& weights) {
  if (k < 1 || k > 256) throw UnsupportedOrder("gauss_legendre: bad point count");
  nodes.assign(k, 0.0);
  weights.assign(k, 0.0);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Legendre recurrence up to degree k.
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[k - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[k - 1 - i] = w;
  }
}

QuadratureRule ball_quadrature(int n, int order) {
  if (n < 2 || n > 3) throw UnsupportedDimension("ball_quadrature: n must be 2 or 3");
  if (order < 1 || order > 64) throw UnsupportedOrder("ball_quadrature: order out of range");

  // Radial rule on [0,1] for integrands f(r) r^{n-1}.
  const int kr = (order + n + 1) / 2;
  std::vector<double> rn, rw;
  gauss_legendre(kr, rn, rw);
  std::vector<double> radii(kr), rweights(kr);
  for (int i = 0; i < kr; ++i) {
    const double r = 0.5 * (rn[i] + 1.0);
    radii[i] = r;
    rweights[i] = 0.5 * rw[i] * std::pow(r, n - 1);
  }

  QuadratureRule rule;
  if (n == 2) {
    const int m = order + 1;
    for (int i = 0; i < kr; ++i)
      for (int j = 0; j < m; ++j) {
        const double a = 2.0 * M_PI * j / m;
        Vec x(2);
        x << radii[i] * std::cos(a), radii[i] * std::sin(a);
        rule.nodes.push_back(x);
        rule.weights.push_back(rweights[i] / m);
      }
  } else {
    const int kp = (order + 2) / 2;
    std::vector<double> cn, cw;
    gauss_legendre(kp, cn, cw);
    const int m = order + 1;
    for (int i = 0; i < kr; ++i)
      for (int p = 0; p < kp; ++p) {
        const double c = cn[p];
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int j = 0; j < m; ++j) {
          const double a = 2.0 * M_PI * j / m;
          Vec x(3);
          x << radii[i] * s * std::cos(a), radii[i] * s * std::sin(a), radii[i] * c;
          rule.nodes.push_back(x);
          rule.weights.push_back(rweights[i] * 0.5 * cw[p] / m);
        }
      }
  }

  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

}  // namespace curvscale
