#include "vortexlab/cutoff.hpp"

#include <cmath>

namespace vortexlab {

CutoffValue cutoff_eval(double r, const RadialCutoff& c) {
  const double theta = (r - c.r_inner) / (c.r_outer - c.r_inner);
  // Guard band: phi = 1/theta - 1/(1-theta) overflows the exponential long
  // before theta reaches the endpoints.
  if (theta <= 1e-3) return {0.0, 0.0, 0.0};
  if (theta >= 1.0 - 1e-3) return {1.0, 0.0, 0.0};

  // chi(theta) = g(theta) / (g(theta) + g(1-theta)) with g(t) = exp(-1/t)
  // collapses to a logistic in phi = 1/theta - 1/(1-theta).
  const double a = 1.0 / theta;
  const double b = 1.0 / (1.0 - theta);
  const double phi = a - b;
  const double chi = 1.0 / (1.0 + std::exp(phi));

  const double psi = a * a + b * b;  // -phi'
  const double dpsi = -2.0 * a * a * a + 2.0 * b * b * b;
  const double w = chi * (1.0 - chi);

  const double dchi_dt = w * psi;
  const double d2chi_dt = (1.0 - 2.0 * chi) * w * psi * psi + w * dpsi;

  const double s = 1.0 / (c.r_outer - c.r_inner);
  return {chi, dchi_dt * s, d2chi_dt * s * s};
}

}  // namespace vortexlab
