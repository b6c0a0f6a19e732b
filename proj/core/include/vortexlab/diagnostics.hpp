#ifndef VORTEXLAB_DIAGNOSTICS_HPP
#define VORTEXLAB_DIAGNOSTICS_HPP

#include <utility>
#include <vector>

#include "vortexlab/solver.hpp"

namespace vortexlab {

/// Instantaneous diagnostics for a state; `dissipation_integral` is the
/// caller-maintained running trapezoid of ||grad v||^2 up to state.t.
/// Distances to the Oseen vortex are evaluated on the recomposed field
/// u = alpha u^chi + v via the compactly supported gap (chi - 1) Theta,
/// which is what a periodic box can represent.
DiagnosticRecord record(const SolverState& state, const SolverConfig& cfg,
                        double dissipation_integral = 0.0);

/// L1 vorticity mass outside the sharp disk of radius sqrt(t) log t.
/// Requires t > e; if the radius reaches the box the result is 0 with
/// `clipped` set (mirrors DiagnosticRecord.tail_radius_clipped).
struct TailMass {
  double value = 0.0;
  bool clipped = false;
};
TailMass tail_mass(const ScalarField& omega, double t);

/// max_t |E(t) + D(t) - E(0)| / E(0) with E = 0.5 l2_v^2 and D the
/// dissipation integral. Only meaningful for alpha = 0 trajectories;
/// throws NotApplicable otherwise.
double energy_identity_residual(const Trajectory& traj, double alpha);

/// Smallest K with  l2_v(t)^2 + D(t) <= K (v0_sq + alpha^2 log(1+t))
/// over all records.
double log_energy_envelope(const Trajectory& traj, double alpha,
                           double v0_norm_sq);

/// Least squares of log y against log t on [window.first, window.second];
/// the kPowerLog model fits y = A t^e log t (window must sit in t > 1).
RateFit fit_power_law(const std::vector<std::pair<double, double>>& series,
                      std::pair<double, double> window,
                      RateFit::Model model = RateFit::Model::kPower);

}  // namespace vortexlab

#endif
