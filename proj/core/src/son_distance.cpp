#include "curvscale/son_distance.hpp"

#include <cmath>

#include "curvscale/errors.hpp"

namespace curvscale {

namespace {

void check_square(const Mat& F, const char* who) {
  const int n = static_cast<int>(F.rows());
  if (n < 2 || n > 3 || F.cols() != n)
    throw DimensionMismatch(std::string(who) + ": expected 2x2 or 3x3 matrix");
  if (!is_finite(F)) throw InvalidInput(std::string(who) + ": non-finite entries");
}

Mat spd_power(const Mat& g, double expo, const char* who) {
  check_square(g, who);
  if ((g - Mat(g.transpose())).norm() > 1e-10 * (1.0 + g.norm()))
    throw NotSPD(std::string(who) + ": matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  if (es.info() != Eigen::Success)
    throw SingularDecompositionFailure(std::string(who) + ": eigensolver failed");
  Vec lam = es.eigenvalues();
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 1e-14)
      throw NotSPD(std::string(who) + ": eigenvalue <= 1e-14");
    lam[i] = std::pow(lam[i], expo);
  }
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

double dist_to_son(const Mat& F) {
  check_square(F, "dist_to_son");
  const int n = static_cast<int>(F.rows());
  Eigen::JacobiSVD<Mat> svd(F);
  const auto& sv = svd.singularValues();
  double s = 0.0;
  for (int i = 0; i + 1 < n; ++i) s += (sv[i] - 1.0) * (sv[i] - 1.0);
  const double last = F.determinant() < 0.0 ? sv[n - 1] + 1.0 : sv[n - 1] - 1.0;
  s += last * last;
  return std::sqrt(s);
}

double dist_general_frames(const Mat& A, const Mat& g, const Mat& gt) {
  check_square(A, "dist_general_frames");
  if (g.rows() != A.rows() || gt.rows() != A.rows())
    throw DimensionMismatch("dist_general_frames: dimension mismatch");
  return dist_to_son(spd_power(gt, 0.5, "dist_general_frames") * A *
                     spd_power(g, -0.5, "dist_general_frames"));
}

Mat grad_dist_sq(const Mat& F) {
  check_square(F, "grad_dist_sq");
  if (F.determinant() <= 0.0)
    throw AmbiguousProjection("grad_dist_sq: restricted to det F > 0");
  return 2.0 * (F - nearest_rotation(F).matrix());
}

PerturbedBound perturbed_distance_bound(const Mat& A, const Mat& B, const Mat& F) {
  check_square(A, "perturbed_distance_bound");
  check_square(B, "perturbed_distance_bound");
  check_square(F, "perturbed_distance_bound");
  if (std::abs(A.determinant()) < 1e-14 || std::abs(B.determinant()) < 1e-14)
    throw NotInvertible("perturbed_distance_bound: |det| < 1e-14");
  const int n = static_cast<int>(F.rows());
  const Mat id = Mat::Identity(n, n);
  const double da = (Mat(A.inverse()) - id).norm();
  const double db = (Mat(B.inverse()) - id).norm();
  PerturbedBound out;
  out.lhs = dist_to_son(F);
  out.rhs = (1.0 + da) * (1.0 + db) * dist_to_son(A * F * B) + da + db + da * db;
  return out;
}

Mat spd_sqrt(const Mat& g) { return spd_power(g, 0.5, "spd_sqrt"); }
Mat spd_inv_sqrt(const Mat& g) { return spd_power(g, -0.5, "spd_inv_sqrt"); }

}  // namespace curvscale
