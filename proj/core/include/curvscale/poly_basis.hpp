#ifndef CURVSCALE_POLY_BASIS_HPP
#define CURVSCALE_POLY_BASIS_HPP

#include <array>
#include <vector>

#include "curvscale/types.hpp"

namespace curvscale {

/// Vector-valued monomial fields X -> e_i X^alpha, |alpha| <= degree.
/// Count is n * C(n + degree, degree).
class PolyVectorBasis {
 public:
  struct Element {
    int component;
    std::array<int, 3> alpha;  // exponents, entries past n are zero
  };

  PolyVectorBasis(int n, int degree);

  int space_dim() const { return n_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int a) const { return elements_[a]; }

  /// Scalar monomial X^alpha.
  static double monomial(const std::array<int, 3>& alpha, const Vec& X, int n);

  /// Symmetrized gradient of element a at X.
  Mat sym_grad(int a, const Vec& X) const;

  /// f(X) for a coefficient vector over the basis.
  Vec eval(const Eigen::VectorXd& coeffs, const Vec& X) const;
  /// df(X): rows are components, columns derivatives.
  Mat jacobian(const Eigen::VectorXd& coeffs, const Vec& X) const;

 private:
  int n_;
  int degree_;
  std::vector<Element> elements_;
};

}  // namespace curvscale

#endif
