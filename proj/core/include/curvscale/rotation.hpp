#ifndef CURVSCALE_ROTATION_HPP
#define CURVSCALE_ROTATION_HPP

#include <cstdint>
#include <random>

#include "curvscale/types.hpp"

namespace curvscale {

/// An element of SO(n): orthogonal within 1e-12 (Frobenius) with det = +1.
class Rotation {
 public:
  explicit Rotation(Mat m);

  static Rotation identity(int n);
  /// Planar rotation by angle (n = 2 only).
  static Rotation planar(double angle);
  /// exp(S) of the skew matrix parametrized by s: n=2 expects 1 entry,
  /// n=3 expects the axis-angle vector (Rodrigues).
  static Rotation exp_skew(const Vec& s, int n);

  const Mat& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  Rotation transpose() const;

 private:
  Mat m_;
};

/// Orthogonal polar factor with det +1: the minimizer of |F - Q| over SO(n).
/// Computed from the SVD F = U S V^T as U diag(1,..,1,det(UV^T)) V^T.
/// Throws AmbiguousProjection when det F < 0 and the two smallest singular
/// values coincide within 1e-12 (the minimizer is then not unique).
Rotation nearest_rotation(const Mat& F);

/// Uniform-ish random rotation (QR of a Gaussian matrix, sign-fixed).
Rotation random_rotation(int n, std::mt19937_64& rng);

}  // namespace curvscale

#endif
