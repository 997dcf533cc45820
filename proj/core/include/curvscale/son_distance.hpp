#ifndef CURVSCALE_SON_DISTANCE_HPP
#define CURVSCALE_SON_DISTANCE_HPP

#include <utility>

#include "curvscale/rotation.hpp"
#include "curvscale/types.hpp"

namespace curvscale {

/// Frobenius distance from F to SO(n), via singular values:
/// sqrt(sum (s_i - 1)^2) when det F >= 0, with the smallest singular value
/// reflected to -1 when det F < 0.
double dist_to_son(const Mat& F);

/// Distance of the frame-corrected matrix gt^{1/2} A g^{-1/2} to SO(n),
/// for SPD metrics g (source frame) and gt (target frame).
double dist_general_frames(const Mat& A, const Mat& g, const Mat& gt);

/// Gradient of F |-> dist^2(F, SO(n)) on the det > 0 region:
/// 2 (F - nearest_rotation(F)). Inputs with det F <= 0 are rejected.
Mat grad_dist_sq(const Mat& F);

struct PerturbedBound {
  double lhs;  // dist(F, SO(n))
  double rhs;  // multiplicative/additive bound through dist(AFB, SO(n))
};

/// lhs = dist(F, SO(n));
/// rhs = (1+|A^{-1}-I|)(1+|B^{-1}-I|) dist(AFB, SO(n))
///       + |A^{-1}-I| + |B^{-1}-I| + |A^{-1}-I||B^{-1}-I|.
/// Contract: lhs <= rhs for all invertible A, B.
PerturbedBound perturbed_distance_bound(const Mat& A, const Mat& B, const Mat& F);

/// Symmetric square root / inverse square root of an SPD matrix.
/// Throws NotSPD when an eigenvalue is <= 1e-14.
Mat spd_sqrt(const Mat& g);
Mat spd_inv_sqrt(const Mat& g);

}  // namespace curvscale

#endif
