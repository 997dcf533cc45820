#ifndef CURVSCALE_TYPES_HPP
#define CURVSCALE_TYPES_HPP

#include <Eigen/Dense>

namespace curvscale {

// Working dimensions are 2 and 3; bounded dynamic sizes keep everything on
// the stack while allowing one code path for both.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

namespace tol {
// Repo-wide tolerance tiers.
inline constexpr double algebraic = 1e-12;    // exact algebraic identities
inline constexpr double randomized = 1e-10;   // randomized inequality slack
inline constexpr double finite_diff = 1e-6;   // finite-difference agreement
}  // namespace tol

inline bool is_finite(const Mat& a) { return a.allFinite(); }
inline bool is_finite(const Vec& v) { return v.allFinite(); }

}  // namespace curvscale

#endif
