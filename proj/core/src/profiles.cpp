#include "vortexlab/profiles.hpp"

#include <cmath>

namespace vortexlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
inline double rad(const Vec2& x) { return std::hypot(x.x, x.y); }
}  // namespace

namespace radial {

double theta_over_r(double r, double t) {
  const double T = 1.0 + t;
  const double r2 = r * r;
  // Removable singularity at the origin: series branch kills the 0/0.
  if (r2 < 1e-8 * T) {
    const double rho = r2 / (4.0 * T);
    return (1.0 - 0.5 * rho) / (8.0 * kPi * T);
  }
  const double m = -std::expm1(-r2 / (4.0 * T));
  return m / (2.0 * kPi * r2);
}

double theta_over_r_prime(double r, double t) {
  const double T = 1.0 + t;
  const double rho = r * r / (4.0 * T);
  if (rho < 1e-4) {
    return -(r / (32.0 * kPi * T * T)) * (1.0 - 2.0 * rho / 3.0);
  }
  const double e = std::exp(-rho);
  const double m = 1.0 - e;
  return e / (4.0 * kPi * r * T) - m / (kPi * r * r * r);
}

double uchi_g(double r, double t, const RadialCutoff& c) {
  const double chi = cutoff_eval(r, c).chi;
  return chi == 0.0 ? 0.0 : chi * theta_over_r(r, t);
}

double uchi_g_prime(double r, double t, const RadialCutoff& c) {
  const auto cv = cutoff_eval(r, c);
  if (cv.chi == 0.0 && cv.dchi == 0.0) return 0.0;
  return cv.dchi * theta_over_r(r, t) + cv.chi * theta_over_r_prime(r, t);
}

double grad_sq_of_tangential(double g, double gprime, double r) {
  const double a = g + r * gprime;
  return g * g + a * a;
}

double omega_chi(double r, double t, const RadialCutoff& c) {
  const double T = 1.0 + t;
  const auto cv = cutoff_eval(r, c);
  const double e = std::exp(-r * r / (4.0 * T));
  const double xi = e / (4.0 * kPi * T);
  double w = cv.chi * xi;
  if (cv.dchi != 0.0) w += (1.0 - e) * cv.dchi / (2.0 * kPi * r);
  return w;
}

double omega_chi_prime(double r, double t, const RadialCutoff& c) {
  const double T = 1.0 + t;
  const auto cv = cutoff_eval(r, c);
  const double e = std::exp(-r * r / (4.0 * T));
  const double xi = e / (4.0 * kPi * T);
  const double xi_r = -(r / (2.0 * T)) * xi;
  double w = cv.dchi * xi + cv.chi * xi_r;
  if (cv.dchi != 0.0 || cv.d2chi != 0.0) {
    const double m = 1.0 - e;
    const double m_r = e * r / (2.0 * T);
    w += (m_r * cv.dchi + m * cv.d2chi) / (2.0 * kPi * r) -
         m * cv.dchi / (2.0 * kPi * r * r);
  }
  return w;
}

double omega_chi_tdot(double r, double t, const RadialCutoff& c) {
  const double T = 1.0 + t;
  const auto cv = cutoff_eval(r, c);
  const double e = std::exp(-r * r / (4.0 * T));
  const double xi = e / (4.0 * kPi * T);
  const double xi_t = xi * (r * r / (4.0 * T * T) - 1.0 / T);
  double w = cv.chi * xi_t;
  if (cv.dchi != 0.0 && r > 0.0) {
    const double e_t = e * r * r / (4.0 * T * T);
    w -= e_t * cv.dchi / (2.0 * kPi * r);
  }
  return w;
}

double remainder_q(double r, double t, const RadialCutoff& c) {
  const auto cv = cutoff_eval(r, c);
  if (cv.dchi == 0.0 && cv.d2chi == 0.0) return 0.0;
  const double T = 1.0 + t;
  const double h = theta_over_r(r, t);
  const double xi = std::exp(-r * r / (4.0 * T)) / (4.0 * kPi * T);
  return h * (cv.d2chi + cv.dchi / r) + (2.0 * cv.dchi / r) * (xi - h);
}

}  // namespace radial

Vec2 oseen_velocity(const SpaceTime& p) {
  const double r = rad(p.x);
  if (r == 0.0) return {0.0, 0.0};
  const double g = radial::theta_over_r(r, p.t);
  return {-p.x.y * g, p.x.x * g};
}

double oseen_vorticity(const SpaceTime& p) {
  const double T = 1.0 + p.t;
  const double r = rad(p.x);
  return std::exp(-r * r / (4.0 * T)) / (4.0 * kPi * T);
}

Vec2 truncated_velocity(const SpaceTime& p, const RadialCutoff& c) {
  const double r = rad(p.x);
  const double g = radial::uchi_g(r, p.t, c);
  return {-p.x.y * g, p.x.x * g};
}

double truncated_vorticity(const SpaceTime& p, const RadialCutoff& c) {
  return radial::omega_chi(rad(p.x), p.t, c);
}

Vec2 remainder(const SpaceTime& p, const RadialCutoff& c) {
  const double r = rad(p.x);
  if (r <= c.r_inner || r >= c.r_outer) return {0.0, 0.0};
  const double q = radial::remainder_q(r, p.t, c);
  return {-p.x.y * q, p.x.x * q};
}

}  // namespace vortexlab
