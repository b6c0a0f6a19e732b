#include "vortexlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "vortexlab/norms.hpp"

namespace vortexlab {

namespace {
constexpr double kE = 2.71828182845904523536;
}

DiagnosticRecord record(const SolverState& state, const SolverConfig& cfg,
                        double dissipation_integral) {
  const Grid& g = cfg.grid;
  const double alpha = cfg.params.alpha;
  const double t = state.t;
  const Spectral& sp = spectral_for(g);

  DiagnosticRecord rec;
  rec.t = t;
  rec.dissipation_integral = dissipation_integral;
  rec.circulation = alpha + total_circulation(state.zeta);

  const Spectral::Modes zhat = sp.forward(state.zeta);
  VectorField v{sp.inverse(sp.biot_savart_x(zhat)),
                sp.inverse(sp.biot_savart_y(zhat))};
  rec.l2_v = lp_norm(v, 2.0);
  rec.h1_v = sp.l2_norm(zhat);  // ||grad v|| = ||curl v|| for div-free v

  if (alpha != 0.0) {
    // u - alpha Theta = alpha (chi - 1) Theta + v: the gap is compactly
    // supported, so the periodic box represents it without tail error.
    VectorField w = v;
    ScalarField dvort = state.zeta;
    ScalarField omega = state.zeta;
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix) {
        const Vec2 x = g.node(ix, iy);
        const double r = std::hypot(x.x, x.y);
        const double chi = cutoff_eval(r, cfg.cutoff).chi;
        const double gap = (chi - 1.0) * radial::theta_over_r(r, t);
        w.x().at(ix, iy) += alpha * -x.y * gap;
        w.y().at(ix, iy) += alpha * x.x * gap;
        const double omchi = radial::omega_chi(r, t, cfg.cutoff);
        const double xi = oseen_vorticity({x, t});
        dvort.at(ix, iy) += alpha * (omchi - xi);
        omega.at(ix, iy) += alpha * omchi;
      }
    rec.l2_dist_oseen = lp_norm(w, 2.0);
    const auto wx = sp.forward(w.x());
    const auto wy = sp.forward(w.y());
    rec.h1_dist_oseen = std::hypot(sp.h1_seminorm(wx), sp.h1_seminorm(wy));
    rec.l1_vort_dist = lp_norm(dvort, 1.0);
    const TailMass tm = tail_mass(omega, t);
    rec.tail_mass = tm.value;
    rec.tail_radius_clipped = tm.clipped;
  } else {
    rec.l2_dist_oseen = rec.l2_v;
    rec.h1_dist_oseen = rec.h1_v;
    rec.l1_vort_dist = lp_norm(state.zeta, 1.0);
    const TailMass tm = tail_mass(state.zeta, t);
    rec.tail_mass = tm.value;
    rec.tail_radius_clipped = tm.clipped;
  }
  return rec;
}

TailMass tail_mass(const ScalarField& omega, double t) {
  if (t <= kE) return {0.0, true};
  const double radius = std::sqrt(t) * std::log(t);
  if (radius >= omega.grid().half_width) return {0.0, true};
  const double r2 = radius * radius;
  const RegionMask outside = [r2](Vec2 x) {
    return x.x * x.x + x.y * x.y >= r2;
  };
  return {lp_norm(omega, 1.0, outside), false};
}

double energy_identity_residual(const Trajectory& traj, double alpha) {
  if (alpha != 0.0)
    throw NotApplicable(
        "energy identity only holds for finite-energy (alpha = 0) runs");
  if (traj.records.empty()) throw NotApplicable("empty trajectory");
  const double e0 = 0.5 * traj.records.front().l2_v * traj.records.front().l2_v;
  if (e0 == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto& r : traj.records) {
    const double lhs = 0.5 * r.l2_v * r.l2_v + r.dissipation_integral;
    worst = std::max(worst, std::fabs(lhs - e0) / e0);
  }
  return worst;
}

double log_energy_envelope(const Trajectory& traj, double alpha,
                           double v0_norm_sq) {
  double k = 0.0;
  for (const auto& r : traj.records) {
    const double lhs = r.l2_v * r.l2_v + r.dissipation_integral;
    const double den = v0_norm_sq + alpha * alpha * std::log1p(r.t);
    if (den > 0.0) k = std::max(k, lhs / den);
  }
  return k;
}

RateFit fit_power_law(const std::vector<std::pair<double, double>>& series,
                      std::pair<double, double> window,
                      RateFit::Model model) {
  std::vector<std::pair<double, double>> pts;  // (log t, log y adjusted)
  for (const auto& [t, y] : series) {
    if (t < window.first || t > window.second) continue;
    if (!(y > 0.0)) throw NonPositiveValues("fit_power_law: y <= 0 at t=" +
                                            std::to_string(t));
    double ly = std::log(y);
    if (model == RateFit::Model::kPowerLog) {
      if (!(t > 1.0))
        throw NonPositiveValues("fit_power_law: log model needs t > 1");
      ly -= std::log(std::log(t));
    }
    pts.emplace_back(std::log(t), ly);
  }
  if (pts.size() < 8)
    throw InsufficientData("fit_power_law: need >= 8 points in window, got " +
                           std::to_string(pts.size()));

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = double(pts.size());
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double icept = (sy * sxx - sx * sxy) / det;

  double rss = 0.0;
  for (const auto& [x, y] : pts) {
    const double e = y - (icept + slope * x);
    rss += e * e;
  }
  RateFit fit;
  fit.exponent = slope;
  fit.amplitude = std::exp(icept);
  fit.t_min = window.first;
  fit.t_max = window.second;
  fit.residual = std::sqrt(rss / n);
  fit.model = model;
  return fit;
}

}  // namespace vortexlab
