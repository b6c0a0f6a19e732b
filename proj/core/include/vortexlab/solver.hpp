#ifndef VORTEXLAB_SOLVER_HPP
#define VORTEXLAB_SOLVER_HPP

#include <functional>
#include <optional>
#include <utility>

#include "vortexlab/records.hpp"
#include "vortexlab/spectral.hpp"

namespace vortexlab {

struct Penalization {
  ScalarField mask;  // 1 on the obstacle, 0 outside
  double epsilon = 1e-2;
};

struct SolverConfig {
  Grid grid;
  double dt = 0.01;
  double t_end = 1.0;
  VortexParams params;
  RadialCutoff cutoff;
  bool dealias = true;
  double c_cfl = 0.5;
  std::optional<Penalization> penalization;
};

/// Mean-free perturbation vorticity zeta = curl v in u = alpha u^chi + v.
/// All circulation lives in the analytic background.
struct SolverState {
  double t = 0.0;
  ScalarField zeta;
};

/// alpha = circulation of omega0; zeta0 = omega0 - alpha * omega^chi(.,0).
std::pair<double, ScalarField> decompose_initial_data(
    const ScalarField& omega0, const RadialCutoff& cutoff);

/// Time derivative of zeta:
///   d/dt zeta = Lap zeta - (alpha u^chi + v).grad zeta
///               - alpha v.grad omega^chi + alpha curl R^chi [- penalization]
/// with v = biot_savart(zeta). Advection is pseudo-spectral, dealiased.
ScalarField rhs(const SolverState& state, const SolverConfig& cfg);

/// One integrating-factor RK4 step: diffusion exact via exp(-k^2 dt)
/// multipliers, the rest by classical RK4. The zero mode is pinned to 0.
SolverState step(const SolverState& state, const SolverConfig& cfg);

struct RunOptions {
  double diag_interval = 0.1;
  /// Called on the initial state and after every accepted step.
  std::function<void(const SolverState&)> observer;
};

Trajectory run(const SolverConfig& cfg,
               const std::pair<double, ScalarField>& init,
               const RunOptions& opts);

}  // namespace vortexlab

#endif
