#ifndef VORTEXLAB_PROFILES_HPP
#define VORTEXLAB_PROFILES_HPP

#include "vortexlab/cutoff.hpp"

namespace vortexlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

/// Circulation of the background vortex. Kinematic viscosity is normalized
/// to 1 throughout.
struct VortexParams {
  double alpha = 0.0;
};

struct SpaceTime {
  Vec2 x;
  double t = 0.0;
};

// Oseen vortex: velocity Theta and Gaussian vorticity Xi.
Vec2 oseen_velocity(const SpaceTime& p);
double oseen_vorticity(const SpaceTime& p);

// Truncated vortex u^chi = chi * Theta and its vorticity, plus the remainder
// R^chi = Laplacian(u^chi) - d/dt u^chi, supported in the cut-off annulus.
Vec2 truncated_velocity(const SpaceTime& p, const RadialCutoff& c);
double truncated_vorticity(const SpaceTime& p, const RadialCutoff& c);
Vec2 remainder(const SpaceTime& p, const RadialCutoff& c);

/// Radial closed forms. All tangential fields here have the shape
/// u = x^perp * g(r), so 1D profiles are enough for norms and quadrature.
namespace radial {

/// |Theta|(r,t) / r, i.e. Theta = x^perp * theta_over_r.
double theta_over_r(double r, double t);
/// d/dr of theta_over_r.
double theta_over_r_prime(double r, double t);
/// g(r) = chi(r) * theta_over_r and its derivative; u^chi = x^perp * g.
double uchi_g(double r, double t, const RadialCutoff& c);
double uchi_g_prime(double r, double t, const RadialCutoff& c);
/// Pointwise |grad u|^2 for u = x^perp g(r): 2 g^2 + 2 r g g' + r^2 g'^2,
/// independent of the polar angle.
double grad_sq_of_tangential(double g, double gprime, double r);
/// omega^chi as a function of radius.
double omega_chi(double r, double t, const RadialCutoff& c);
/// d/dr omega^chi (analytic; used by the solver's stirring term).
double omega_chi_prime(double r, double t, const RadialCutoff& c);
/// d/dt omega^chi (analytic; curl R^chi = Lap omega^chi - d/dt omega^chi).
double omega_chi_tdot(double r, double t, const RadialCutoff& c);
/// Q(r) with R^chi = x^perp * Q.
double remainder_q(double r, double t, const RadialCutoff& c);

}  // namespace radial

}  // namespace vortexlab

#endif
