#ifndef CURVSCALE_CURVATURE_HPP
#define CURVSCALE_CURVATURE_HPP

#include <random>
#include <vector>

#include "curvscale/rotation.hpp"
#include "curvscale/types.hpp"

namespace curvscale {

/// Components A^i_{jkl} of a (1,3)-tensor in an orthonormal frame (index
/// position immaterial). When curvature_like, the four Riemann symmetries
///   A_ijkl = -A_ikjl,  A_ijkl = -A_ljki,  A_ijkl = A_klij,
///   A_ijkl + A_iklj + A_iljk = 0
/// hold within 1e-12 componentwise and are checked by validate().
class CurvatureTensor {
 public:
  CurvatureTensor(int n, bool curvature_like);

  int dim() const { return n_; }
  bool is_curvature_like() const { return curvature_like_; }

  double& operator()(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }

  /// Throws InvalidInput when curvature_like and a symmetry is violated.
  void validate() const;

  CurvatureTensor operator-(const CurvatureTensor& other) const;
  CurvatureTensor operator*(double c) const;

  double frobenius_norm() const;
  double max_abs() const;
  bool is_zero(double eps = 0.0) const;

 private:
  int idx(int i, int j, int k, int l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  bool curvature_like_;
  std::vector<double> c_;
};

/// A_ijkl = K (delta_kl delta_ij - delta_jl delta_ik): the curvature tensor
/// of the space form with sectional curvature K.
CurvatureTensor constant_curvature_tensor(double K, int n);

/// comps'_ijkl = sum Q_ai Q_bj Q_ck Q_dl Rt_abcd: the tensor seen through the
/// frame rotated by Q. Preserves the curvature symmetries.
CurvatureTensor pullback_curvature(const CurvatureTensor& Rt, const Rotation& Q);

/// Raw contraction M_ik = sum_{j,l} A_ijkl X^j X^l.
Mat curvature_contraction(const CurvatureTensor& A, const Vec& X);

/// Quadratic data of the limit functional: (1/6) curvature_contraction(A, X).
/// A holds the already-differenced tensor.
Mat b_field(const CurvatureTensor& A, const Vec& X);

/// Random tensor with the full curvature symmetries, Frobenius norm in
/// [0.5, 2]. Used by property suites.
CurvatureTensor random_curvature_like(int n, std::mt19937_64& rng);

}  // namespace curvscale

#endif
