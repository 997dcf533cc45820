#ifndef CURVSCALE_LIMIT_SOLVER_HPP
#define CURVSCALE_LIMIT_SOLVER_HPP

#include <cstdint>
#include <utility>

#include "curvscale/ball_quadrature.hpp"
#include "curvscale/curvature.hpp"
#include "curvscale/poly_basis.hpp"
#include "curvscale/rotation.hpp"

namespace curvscale {

/// Quadratic form of the limit functional over a polynomial basis:
/// value(c) = c' gram c - 2 rhs' c + c0, all entries averaged over the unit
/// ball. The gram kernel is exactly the affine-skew fields in the basis.
struct QuadraticProblem {
  Eigen::MatrixXd gram;
  Eigen::VectorXd rhs;
  double c0 = 0.0;

  double value(const Eigen::VectorXd& c) const {
    return c.dot(gram * c) - 2.0 * rhs.dot(c) + c0;
  }
};

/// Caches everything that does not depend on the curvature tensor: basis
/// sym-gradients at quadrature nodes, the gram matrix and its
/// eigendecomposition. Assembling for a new tensor then costs one pass over
/// the nodes.
class LimitAssembler {
 public:
  explicit LimitAssembler(const PolyVectorBasis& basis);

  const PolyVectorBasis& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  const QuadratureRule& rule() const { return rule_; }

  QuadraticProblem assemble(const CurvatureTensor& A) const;
  /// Minimum of the functional and a representative minimizer.
  std::pair<double, Eigen::VectorXd> minimize(const CurvatureTensor& A) const;
  /// Number of gram eigenvalues below the kernel threshold.
  int kernel_dimension() const;

 private:
  std::pair<double, Eigen::VectorXd> solve(const QuadraticProblem& prob) const;
  friend std::pair<double, Eigen::VectorXd> solve_m(const QuadraticProblem&,
                                                    const LimitAssembler&);

  PolyVectorBasis basis_;
  QuadratureRule rule_;
  Eigen::MatrixXd gram_;
  Eigen::VectorXd scale_;         // Jacobi scaling of the gram
  Eigen::MatrixXd eigvecs_;       // of the scaled gram
  Eigen::VectorXd eigvals_;
};

/// One-shot assembly of the limit functional for tensor A over the basis.
QuadraticProblem assemble_limit_functional(const CurvatureTensor& A,
                                           const PolyVectorBasis& basis);

/// Minimum of an assembled problem with rigid-motion kernel handling
/// (eigenvalue thresholding at 1e-10 of the largest eigenvalue). Returns the
/// minimum m >= 0 and a representative coefficient vector.
std::pair<double, Eigen::VectorXd> solve_m(const QuadraticProblem& prob);

/// m for the difference tensor R - pullback_curvature(Rt, Q).
double m_of_Q(const CurvatureTensor& R, const CurvatureTensor& Rt,
              const Rotation& Q, const PolyVectorBasis& basis);

struct QSearchConfig {
  int grid_size = 16;     // >= 8 for n=2, >= 64 for n=3
  double tol = 1e-10;     // stop when refinement improves m by less
  int seeds = 3;          // extra local-search starts
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

struct QSearchResult {
  Rotation Qstar;
  double mstar;
};

/// Coarse search over SO(n) followed by Nelder-Mead refinement in the skew
/// chart Q = Q0 exp(S). Heuristic global search; returns the best found.
QSearchResult minimize_over_rotations(const CurvatureTensor& R,
                                      const CurvatureTensor& Rt,
                                      const PolyVectorBasis& basis,
                                      const QSearchConfig& search);

}  // namespace curvscale

#endif
