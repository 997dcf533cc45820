#ifndef CURVSCALE_ELASTIC_ENERGY_HPP
#define CURVSCALE_ELASTIC_ENERGY_HPP

#include <vector>

#include "curvscale/ball_mesh.hpp"
#include "curvscale/space_form.hpp"

namespace curvscale {

/// Piecewise-affine map from the unit-ball mesh into the target chart,
/// stored as nodal values in rescaled coordinates: the physical map is
/// exp_p(h x) |-> exp_q(h u(x)).
struct DiscreteMap {
  const BallMesh* mesh = nullptr;
  std::vector<Vec> nodal;

  static DiscreteMap identity(const BallMesh& m);
};

/// Average of dist^2(du, SO(g, g_tilde)) over the ball of radius h, in
/// rescaled chart coordinates. Per quadrature point x the integrand is
/// dist_general_frames(D, g_dom(h x), g_tgt(h u(x)))^2 with D the cellwise
/// differential, weighted by the domain volume density at h x.
double elastic_energy(const DiscreteMap& u, const SpaceForm& dom,
                      const SpaceForm& tgt, double h);

/// Exact gradient of the discrete energy with respect to nodal values. The
/// dependence of the target metric on u(x) is included. Throws
/// AmbiguousProjection when some cell's frame-corrected differential has
/// det <= 0.
std::vector<Vec> energy_gradient(const DiscreteMap& u, const SpaceForm& dom,
                                 const SpaceForm& tgt, double h);

/// Combined pass; grad may be null for an energy-only evaluation.
double energy_and_gradient(const DiscreteMap& u, const SpaceForm& dom,
                           const SpaceForm& tgt, double h, std::vector<Vec>* grad);

/// True when every nodal value lies strictly inside the target chart at
/// scale h and every cell differential has positive determinant.
bool map_is_feasible(const DiscreteMap& u, const SpaceForm& tgt, double h);

}  // namespace curvscale

#endif
