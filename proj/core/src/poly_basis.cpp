#include "curvscale/poly_basis.hpp"

#include <cmath>

#include "curvscale/errors.hpp"

namespace curvscale {

PolyVectorBasis::PolyVectorBasis(int n, int degree) : n_(n), degree_(degree) {
  if (n < 2 || n > 3) throw UnsupportedDimension("PolyVectorBasis: n must be 2 or 3");
  if (degree < 0 || degree > 12) throw InvalidInput("PolyVectorBasis: bad degree");
  // Graded lexicographic enumeration of multi-indices, outer loop over the
  // vector component so the layout is stable.
  for (int comp = 0; comp < n; ++comp)
    for (int total = 0; total <= degree; ++total) {
      if (n == 2) {
        for (int a0 = total; a0 >= 0; --a0)
          elements_.push_back({comp, {a0, total - a0, 0}});
      } else {
        for (int a0 = total; a0 >= 0; --a0)
          for (int a1 = total - a0; a1 >= 0; --a1)
            elements_.push_back({comp, {a0, a1, total - a0 - a1}});
      }
    }
}

double PolyVectorBasis::monomial(const std::array<int, 3>& alpha, const Vec& X, int n) {
  double v = 1.0;
  for (int d = 0; d < n; ++d)
    for (int p = 0; p < alpha[d]; ++p) v *= X[d];
  return v;
}

Mat PolyVectorBasis::sym_grad(int a, const Vec& X) const {
  const Element& el = elements_[a];
  Mat g = Mat::Zero(n_, n_);
  for (int k = 0; k < n_; ++k) {
    if (el.alpha[k] == 0) continue;
    auto alpha = el.alpha;
    alpha[k] -= 1;
    const double dk = el.alpha[k] * monomial(alpha, X, n_);
    g(el.component, k) += 0.5 * dk;
    g(k, el.component) += 0.5 * dk;
  }
  return g;
}

Vec PolyVectorBasis::eval(const Eigen::VectorXd& coeffs, const Vec& X) const {
  if (coeffs.size() != size())
    throw DimensionMismatch("PolyVectorBasis::eval: coefficient count mismatch");
  Vec f = Vec::Zero(n_);
  for (int a = 0; a < size(); ++a) {
    if (coeffs[a] == 0.0) continue;
    f[elements_[a].component] += coeffs[a] * monomial(elements_[a].alpha, X, n_);
  }
  return f;
}

Mat PolyVectorBasis::jacobian(const Eigen::VectorXd& coeffs, const Vec& X) const {
  if (coeffs.size() != size())
    throw DimensionMismatch("PolyVectorBasis::jacobian: coefficient count mismatch");
  Mat J = Mat::Zero(n_, n_);
  for (int a = 0; a < size(); ++a) {
    if (coeffs[a] == 0.0) continue;
    const Element& el = elements_[a];
    for (int k = 0; k < n_; ++k) {
      if (el.alpha[k] == 0) continue;
      auto alpha = el.alpha;
      alpha[k] -= 1;
      J(el.component, k) += coeffs[a] * el.alpha[k] * monomial(alpha, X, n_);
    }
  }
  return J;
}

}  // namespace curvscale
