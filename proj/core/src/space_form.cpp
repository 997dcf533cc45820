#include "curvscale/space_form.hpp"

#include <cmath>
#include <limits>

#include "curvscale/errors.hpp"
#include "curvscale/son_distance.hpp"

namespace curvscale {

namespace {

constexpr double kSeriesCutoff = 1e-2;

// sinc1(w) = sin(sqrt w)/sqrt w, continued through w <= 0 by sinh.
double sinc1(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return 1.0 + w * (-1.0 / 6.0 + w * (1.0 / 120.0 + w * (-1.0 / 5040.0 + w / 362880.0)));
  if (w > 0.0) {
    const double u = std::sqrt(w);
    return std::sin(u) / u;
  }
  const double u = std::sqrt(-w);
  return std::sinh(u) / u;
}

double sinc1_deriv(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return -1.0 / 6.0 + w * (1.0 / 60.0 + w * (-1.0 / 1680.0 + w / 90720.0));
  if (w > 0.0) {
    const double u = std::sqrt(w);
    return (u * std::cos(u) - std::sin(u)) / (2.0 * w * u);
  }
  const double u = std::sqrt(-w);
  return (u * std::cosh(u) - std::sinh(u)) / (2.0 * w * u);
}

// eta1(w) = (sinc1(w) - 1)/w and its derivative; eta2 the same for sinc1^2,
// etam for 1/sinc1. All are analytic at w = 0.
double eta1(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return -1.0 / 6.0 + w * (1.0 / 120.0 + w * (-1.0 / 5040.0 + w / 362880.0));
  return (sinc1(w) - 1.0) / w;
}

double eta1_deriv(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return 1.0 / 120.0 + w * (-1.0 / 2520.0 + w / 120960.0);
  return (sinc1_deriv(w) * w - (sinc1(w) - 1.0)) / (w * w);
}

double eta2(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return -1.0 / 3.0 + w * (2.0 / 45.0 + w * (-1.0 / 315.0 + w * 2.0 / 14175.0));
  const double s = sinc1(w);
  return (s * s - 1.0) / w;
}

double etam(double w) {
  if (std::abs(w) < kSeriesCutoff)
    return 1.0 / 6.0 + w * (7.0 / 360.0 + w * (31.0 / 15120.0 + w * 127.0 / 604800.0));
  return (1.0 / sinc1(w) - 1.0) / w;
}

Mat rank_deficit(const Vec& y, double t) {
  // t Id - y y^T: vanishes on the radial direction.
  const int n = static_cast<int>(y.size());
  return t * Mat::Identity(n, n) - y * y.transpose();
}

std::vector<Vec> sample_directions(int n) {
  std::vector<Vec> dirs;
  if (n == 2) {
    for (int k = 0; k < 16; ++k) {
      const double a = 2.0 * M_PI * k / 16.0;
      Vec d(2);
      d << std::cos(a), std::sin(a);
      dirs.push_back(d);
    }
    return dirs;
  }
  auto push = [&](double x, double y, double z) {
    Vec d(3);
    d << x, y, z;
    dirs.push_back(d / d.norm());
  };
  for (int s : {-1, 1}) {
    push(s, 0, 0);
    push(0, s, 0);
    push(0, 0, s);
  }
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) {
      push(sx, sy, 0);
      push(sx, 0, sy);
      push(0, sx, sy);
    }
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) push(sx, sy, sz);
  return dirs;
}

}  // namespace

SpaceForm::SpaceForm(SpaceFormKind kind, double K, int n, CurvatureTensor R,
                     double radius)
    : kind_(kind), K_(K), n_(n), R_(std::move(R)), chart_radius_(radius) {}

SpaceForm SpaceForm::euclidean(int n) {
  return SpaceForm(SpaceFormKind::Euclidean, 0.0, n, constant_curvature_tensor(0.0, n),
                   std::numeric_limits<double>::infinity());
}

SpaceForm SpaceForm::sphere(double K, int n) {
  if (K <= 0.0) throw InvalidInput("SpaceForm::sphere: K must be > 0");
  // 0.9 of the injectivity radius keeps the metric away from degeneracy.
  return SpaceForm(SpaceFormKind::Sphere, K, n, constant_curvature_tensor(K, n),
                   0.9 * M_PI / std::sqrt(K));
}

SpaceForm SpaceForm::hyperbolic(double K, int n) {
  if (K >= 0.0) throw InvalidInput("SpaceForm::hyperbolic: K must be < 0");
  return SpaceForm(SpaceFormKind::Hyperbolic, K, n, constant_curvature_tensor(K, n),
                   std::numeric_limits<double>::infinity());
}

SpaceForm SpaceForm::synthetic(const CurvatureTensor& R) {
  if (!R.is_curvature_like())
    throw InvalidInput("SpaceForm::synthetic: tensor must be curvature-like");
  R.validate();
  const int n = R.dim();
  // |(1/3) R[y,y]|_F <= (r^2/3) Z; keep the smallest eigenvalue above 0.5.
  double z = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double row = 0.0;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) row += std::abs(R(i, j, k, l));
      z += row * row;
    }
  z = std::sqrt(z);
  const double radius =
      z > 0.0 ? std::sqrt(1.5 / z) : std::numeric_limits<double>::infinity();
  return SpaceForm(SpaceFormKind::Synthetic, 0.0, n, R, radius);
}

void SpaceForm::check_chart(const Vec& x) const {
  if (x.size() != n_)
    throw DimensionMismatch("SpaceForm: chart point dimension mismatch");
  if (!is_finite(x)) throw InvalidInput("SpaceForm: non-finite chart point");
  if (x.norm() >= chart_radius_)
    throw OutsideChart("SpaceForm: |x| >= chart_radius");
}

Mat SpaceForm::pullback_metric(const Vec& x) const {
  check_chart(x);
  if (kind_ == SpaceFormKind::Synthetic)
    return Mat::Identity(n_, n_) + curvature_contraction(R_, x) / 3.0;
  const double t = x.squaredNorm();
  return Mat::Identity(n_, n_) + K_ * eta2(K_ * t) * rank_deficit(x, t);
}

Mat SpaceForm::metric_sqrt(const Vec& x) const {
  check_chart(x);
  if (kind_ == SpaceFormKind::Synthetic) return spd_sqrt(pullback_metric(x));
  const double t = x.squaredNorm();
  return Mat::Identity(n_, n_) + K_ * eta1(K_ * t) * rank_deficit(x, t);
}

Mat SpaceForm::metric_inv_sqrt(const Vec& x) const {
  check_chart(x);
  if (kind_ == SpaceFormKind::Synthetic) return spd_inv_sqrt(pullback_metric(x));
  const double t = x.squaredNorm();
  return Mat::Identity(n_, n_) + K_ * etam(K_ * t) * rank_deficit(x, t);
}

void SpaceForm::metric_sqrt_and_jacobian(const Vec& y, Mat& S,
                                         std::array<Mat, 3>& dS) const {
  check_chart(y);
  if (kind_ != SpaceFormKind::Synthetic) {
    const double t = y.squaredNorm();
    const double c = K_ * eta1(K_ * t);
    const double cp = K_ * K_ * eta1_deriv(K_ * t);
    const Mat D = rank_deficit(y, t);
    S = Mat::Identity(n_, n_) + c * D;
    for (int m = 0; m < n_; ++m) {
      Mat d = cp * (2.0 * y[m]) * D;
      d += c * (2.0 * y[m]) * Mat::Identity(n_, n_);
      d.row(m) -= c * y.transpose();
      d.col(m) -= c * y;
      dS[m] = d;
    }
    return;
  }
  // Synthetic: differentiate the square root through the eigenbasis.
  const Mat g = pullback_metric(y);
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  if (es.info() != Eigen::Success)
    throw SingularDecompositionFailure("metric_sqrt_and_jacobian: eigensolver failed");
  Vec lam = es.eigenvalues();
  for (int i = 0; i < n_; ++i)
    if (lam[i] <= 1e-14) throw NotSPD("metric_sqrt_and_jacobian: metric not SPD");
  Vec sq = lam.cwiseSqrt();
  const Mat& V = es.eigenvectors();
  S = V * sq.asDiagonal() * V.transpose();
  for (int m = 0; m < n_; ++m) {
    Mat dg = Mat::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        double s = 0.0;
        for (int l = 0; l < n_; ++l) s += R_(i, m, k, l) * y[l];
        for (int j = 0; j < n_; ++j) s += R_(i, j, k, m) * y[j];
        dg(i, k) = s / 3.0;
      }
    Mat W = V.transpose() * dg * V;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) W(a, b) /= sq[a] + sq[b];
    dS[m] = V * W * V.transpose();
  }
}

double SpaceForm::volume_density(const Vec& x) const {
  check_chart(x);
  if (kind_ == SpaceFormKind::Synthetic)
    return std::sqrt(pullback_metric(x).determinant());
  const double s = sinc1(K_ * x.squaredNorm());
  return std::pow(s, n_ - 1);
}

bool SpaceForm::same_geometry(const SpaceForm& other) const {
  if (n_ != other.n_) return false;
  CurvatureTensor d = R_ - other.R_;
  return d.is_zero(0.0);
}

double metric_expansion_order(const SpaceForm& sf, const std::vector<double>& radii) {
  return detail::metric_expansion_order_with_coeff(sf, radii, 1.0 / 3.0);
}

namespace detail {

double metric_expansion_order_with_coeff(const SpaceForm& sf,
                                         const std::vector<double>& radii,
                                         double coeff) {
  if (radii.size() < 2)
    throw InvalidInput("metric_expansion_order: need at least 2 radii");
  for (size_t i = 1; i < radii.size(); ++i)
    if (radii[i] >= radii[i - 1])
      throw InvalidInput("metric_expansion_order: radii must be decreasing");

  const int n = sf.dim();
  const auto dirs = sample_directions(n);
  const CurvatureTensor& R = sf.curvature_at_center();
  std::vector<double> errs;
  errs.reserve(radii.size());
  for (double r : radii) {
    double e = 0.0;
    for (const Vec& d : dirs) {
      const Vec x = r * d;
      const Mat model = Mat::Identity(n, n) + coeff * curvature_contraction(R, x);
      e = std::max(e, (sf.pullback_metric(x) - model).norm());
    }
    errs.push_back(e);
  }
  double emax = 0.0;
  for (double e : errs) emax = std::max(emax, e);
  if (emax <= 1e-14) return std::numeric_limits<double>::infinity();

  // Least-squares slope of log e vs log r.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(radii.size());
  for (size_t i = 0; i < radii.size(); ++i) {
    const double X = std::log(radii[i]);
    const double Y = std::log(std::max(errs[i], 1e-300));
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace detail

}  // namespace curvscale
