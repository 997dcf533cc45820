#include "curvscale/curvature.hpp"

#include <cmath>

#include "curvscale/errors.hpp"

namespace curvscale {

CurvatureTensor::CurvatureTensor(int n, bool curvature_like)
    : n_(n), curvature_like_(curvature_like) {
  if (n < 2 || n > 3)
    throw UnsupportedDimension("CurvatureTensor: n must be 2 or 3");
  c_.assign(static_cast<size_t>(n) * n * n * n, 0.0);
}

void CurvatureTensor::validate() const {
  if (!curvature_like_) return;
  const auto& A = *this;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          if (std::abs(A(i, j, k, l) + A(i, k, j, l)) > 1e-12)
            throw InvalidInput("CurvatureTensor: antisymmetry in (j,k) violated");
          if (std::abs(A(i, j, k, l) + A(l, j, k, i)) > 1e-12)
            throw InvalidInput("CurvatureTensor: antisymmetry in (i,l) violated");
          if (std::abs(A(i, j, k, l) - A(k, l, i, j)) > 1e-12)
            throw InvalidInput("CurvatureTensor: pair exchange violated");
          if (std::abs(A(i, j, k, l) + A(i, k, l, j) + A(i, l, j, k)) > 1e-12)
            throw InvalidInput("CurvatureTensor: first Bianchi identity violated");
        }
}

CurvatureTensor CurvatureTensor::operator-(const CurvatureTensor& other) const {
  if (n_ != other.n_)
    throw DimensionMismatch("CurvatureTensor: dimension mismatch in difference");
  CurvatureTensor out(n_, curvature_like_ && other.curvature_like_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - other.c_[i];
  return out;
}

CurvatureTensor CurvatureTensor::operator*(double c) const {
  CurvatureTensor out(n_, curvature_like_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c * c_[i];
  return out;
}

double CurvatureTensor::frobenius_norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool CurvatureTensor::is_zero(double eps) const { return max_abs() <= eps; }

CurvatureTensor constant_curvature_tensor(double K, int n) {
  CurvatureTensor A(n, true);
  auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          A(i, j, k, l) = K * (d(k, l) * d(i, j) - d(j, l) * d(i, k));
  return A;
}

CurvatureTensor pullback_curvature(const CurvatureTensor& Rt, const Rotation& Q) {
  const int n = Rt.dim();
  if (Q.dim() != n)
    throw DimensionMismatch("pullback_curvature: rotation dimension mismatch");
  const Mat& q = Q.matrix();
  CurvatureTensor out(n, Rt.is_curvature_like());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                  s += q(a, i) * q(b, j) * q(c, k) * q(d, l) * Rt(a, b, c, d);
          out(i, j, k, l) = s;
        }
  return out;
}

Mat curvature_contraction(const CurvatureTensor& A, const Vec& X) {
  const int n = A.dim();
  if (X.size() != n)
    throw DimensionMismatch("curvature_contraction: vector dimension mismatch");
  Mat M = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) s += A(i, j, k, l) * X[j] * X[l];
      M(i, k) = s;
    }
  return M;
}

Mat b_field(const CurvatureTensor& A, const Vec& X) {
  return curvature_contraction(A, X) / 6.0;
}

CurvatureTensor random_curvature_like(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Draw in the convention T_abcd = A_dabc, project onto the symmetry
    // class, then map back.
    std::vector<double> T(static_cast<size_t>(n) * n * n * n);
    auto at = [&](std::vector<double>& t, int a, int b, int c, int d) -> double& {
      return t[static_cast<size_t>(((a * n + b) * n + c) * n + d)];
    };
    for (auto& v : T) v = uni(rng);

    std::vector<double> P(T.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            at(P, a, b, c, d) = 0.5 * (at(T, a, b, c, d) - at(T, b, a, c, d));
    T = P;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            at(P, a, b, c, d) = 0.5 * (at(T, a, b, c, d) - at(T, a, b, d, c));
    T = P;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            at(P, a, b, c, d) = 0.5 * (at(T, a, b, c, d) + at(T, c, d, a, b));
    T = P;
    // Remove the totally antisymmetric Bianchi residue.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            at(P, a, b, c, d) =
                at(T, a, b, c, d) -
                (at(T, a, b, c, d) + at(T, a, c, d, b) + at(T, a, d, b, c)) / 3.0;

    CurvatureTensor A(n, true);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) A(i, j, k, l) = at(P, j, k, l, i);

    const double norm = A.frobenius_norm();
    if (norm < 0.1) continue;
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    CurvatureTensor out = A * (scale(rng) / norm);
    out.validate();
    return out;
  }
  throw Error("random_curvature_like: failed to draw a nonzero tensor");
}

}  // namespace curvscale
