#ifndef CURVSCALE_SPACE_FORM_HPP
#define CURVSCALE_SPACE_FORM_HPP

#include <array>
#include <vector>

#include "curvscale/curvature.hpp"
#include "curvscale/types.hpp"

namespace curvscale {

enum class SpaceFormKind { Euclidean, Sphere, Hyperbolic, Synthetic };

/// Model manifold with a closed-form pullback metric in normal coordinates
/// at a fixed center point.
///
/// For constant curvature K the metric at chart point y is
///   g(y) = P_rad + (s_K(r)/r)^2 (I - P_rad),  r = |y|,
/// with s_K(r) = sin(sqrt(K) r)/sqrt(K) (K>0), r (K=0), sinh variant (K<0);
/// the radial coefficient is identically 1. The Synthetic kind carries the
/// truncated quadratic model g(y) = I + (1/3) R[y,y] built from an arbitrary
/// curvature-like tensor, with a chart radius keeping the smallest metric
/// eigenvalue above 0.5.
class SpaceForm {
 public:
  static SpaceForm euclidean(int n);
  static SpaceForm sphere(double K, int n);      // K > 0
  static SpaceForm hyperbolic(double K, int n);  // K < 0
  static SpaceForm synthetic(const CurvatureTensor& R);

  SpaceFormKind kind() const { return kind_; }
  int dim() const { return n_; }
  double curvature() const { return K_; }  // 0 for Synthetic
  double chart_radius() const { return chart_radius_; }
  const CurvatureTensor& curvature_at_center() const { return R_; }

  /// Metric coefficients at chart point x (SPD). Throws OutsideChart when
  /// |x| >= chart_radius.
  Mat pullback_metric(const Vec& x) const;
  Mat metric_sqrt(const Vec& x) const;
  Mat metric_inv_sqrt(const Vec& x) const;
  /// Square root of the metric together with its partial derivatives
  /// dS/dy^m, m = 0..n-1.
  void metric_sqrt_and_jacobian(const Vec& y, Mat& S, std::array<Mat, 3>& dS) const;

  /// sqrt(det g(x)) = (s_K(r)/r)^(n-1) for space forms.
  double volume_density(const Vec& x) const;

  bool same_geometry(const SpaceForm& other) const;

 private:
  SpaceForm(SpaceFormKind kind, double K, int n, CurvatureTensor R, double radius);
  void check_chart(const Vec& x) const;

  SpaceFormKind kind_;
  double K_;
  int n_;
  CurvatureTensor R_;
  double chart_radius_;
};

/// Fitted slope of log(max-direction deviation) vs log(r) for the deviation
/// |g(r e) - (I + coeff * R[re, re])| over the given decreasing radii, with
/// coeff = 1/3. Returns +inf when the deviation vanishes identically
/// (Euclidean, Synthetic). Contract for space forms: slope >= 3.9.
double metric_expansion_order(const SpaceForm& sf, const std::vector<double>& radii);

namespace detail {
/// Same fit with an arbitrary quadratic-model coefficient; exposes the
/// sensitivity of the order check to a wrong coefficient or sign.
double metric_expansion_order_with_coeff(const SpaceForm& sf,
                                         const std::vector<double>& radii,
                                         double coeff);
}  // namespace detail

}  // namespace curvscale

#endif
