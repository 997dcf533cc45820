#include "curvscale/rotation.hpp"

#include <cmath>

#include "curvscale/errors.hpp"

namespace curvscale {

Rotation::Rotation(Mat m) : m_(std::move(m)) {
  const int n = static_cast<int>(m_.rows());
  if (n < 2 || n > 3 || m_.cols() != n)
    throw DimensionMismatch("Rotation: expected square 2x2 or 3x3 matrix");
  if (!is_finite(m_)) throw InvalidInput("Rotation: non-finite entries");
  const double ortho = (m_.transpose() * m_ - Mat::Identity(n, n)).norm();
  if (ortho > 1e-12)
    throw InvalidInput("Rotation: matrix not orthogonal (|Q^T Q - I| = " +
                       std::to_string(ortho) + ")");
  if (std::abs(m_.determinant() - 1.0) > 1e-12)
    throw InvalidInput("Rotation: determinant is not +1");
}

Rotation Rotation::identity(int n) { return Rotation(Mat::Identity(n, n)); }

Rotation Rotation::planar(double angle) {
  Mat m(2, 2);
  const double c = std::cos(angle), s = std::sin(angle);
  m << c, -s, s, c;
  return Rotation(m);
}

Rotation Rotation::exp_skew(const Vec& s, int n) {
  if (n == 2) {
    if (s.size() != 1) throw DimensionMismatch("exp_skew: n=2 takes 1 parameter");
    return planar(s[0]);
  }
  if (n != 3 || s.size() != 3)
    throw DimensionMismatch("exp_skew: n=3 takes 3 parameters");
  const double theta = s.norm();
  Mat R = Mat::Identity(3, 3);
  if (theta < 1e-300) return Rotation(R);
  Eigen::Vector3d axis(s[0] / theta, s[1] / theta, s[2] / theta);
  Mat K(3, 3);
  K << 0, -axis[2], axis[1], axis[2], 0, -axis[0], -axis[1], axis[0], 0;
  R += std::sin(theta) * K + (1.0 - std::cos(theta)) * (K * K);
  // Renormalize against roundoff so the constructor's 1e-12 gate holds.
  Eigen::JacobiSVD<Mat> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Rotation(svd.matrixU() * svd.matrixV().transpose());
}

Rotation Rotation::transpose() const { return Rotation(Mat(m_.transpose())); }

Rotation nearest_rotation(const Mat& F) {
  const int n = static_cast<int>(F.rows());
  if (n < 2 || n > 3 || F.cols() != n)
    throw DimensionMismatch("nearest_rotation: expected 2x2 or 3x3 matrix");
  if (!is_finite(F)) throw InvalidInput("nearest_rotation: non-finite entries");

  Eigen::JacobiSVD<Mat> svd(F, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success)
    throw SingularDecompositionFailure("nearest_rotation: SVD failed");
  const auto& sv = svd.singularValues();  // sorted decreasing

  const double det_uv =
      (svd.matrixU() * svd.matrixV().transpose()).determinant();
  if (F.determinant() < 0.0 && sv[n - 2] - sv[n - 1] < 1e-12)
    throw AmbiguousProjection(
        "nearest_rotation: det F < 0 with coinciding smallest singular values");

  Vec d = Vec::Ones(n);
  d[n - 1] = det_uv < 0.0 ? -1.0 : 1.0;
  return Rotation(svd.matrixU() * d.asDiagonal() * svd.matrixV().transpose());
}

Rotation random_rotation(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(A);
  Mat Q = qr.householderQ() * Mat::Identity(n, n);
  // Fix signs so the distribution is Haar and det = +1.
  Mat R = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (R(j, j) < 0.0) Q.col(j) *= -1.0;
  if (Q.determinant() < 0.0) Q.col(0) *= -1.0;
  return Rotation(std::move(Q));
}

}  // namespace curvscale
