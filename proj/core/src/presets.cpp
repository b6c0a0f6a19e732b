#include "vortexlab/presets.hpp"

#include <cmath>

#include "vortexlab/norms.hpp"
#include "vortexlab/snapshot.hpp"
#include "vortexlab/solver.hpp"
#include "vortexlab/spectral.hpp"

namespace vortexlab {

namespace {

constexpr double kSigma = 2.0;  // width of the Gaussian envelopes

ScalarField normalized_to_velocity(ScalarField zeta, double amplitude) {
  // Scale so the induced perturbation velocity has the requested L2 norm.
  const VectorField v = biot_savart(zeta);
  const double norm = lp_norm(v, 2.0);
  if (norm == 0.0) throw Error("init preset produced a zero field");
  scale(zeta, amplitude / norm);
  return zeta;
}

}  // namespace

std::pair<double, ScalarField> make_initial_data(const InitSpec& spec,
                                                 const Grid& grid,
                                                 const RadialCutoff& cutoff,
                                                 double alpha) {
  if (spec.preset == "oseen") {
    ScalarField z = sample(
        [&](Vec2 x) {
          return spec.amplitude * (oseen_vorticity({x, 0.0}) -
                                   truncated_vorticity({x, 0.0}, cutoff));
        },
        grid);
    return {alpha, std::move(z)};
  }
  if (spec.preset == "dipole") {
    ScalarField z = sample(
        [](Vec2 x) {
          const double r2 = x.x * x.x + x.y * x.y;
          return -2.0 * x.x / (kSigma * kSigma) *
                 std::exp(-r2 / (kSigma * kSigma));
        },
        grid);
    return {alpha, normalized_to_velocity(std::move(z), spec.amplitude)};
  }
  if (spec.preset == "quadrupole") {
    ScalarField z = sample(
        [](Vec2 x) {
          const double s2 = kSigma * kSigma;
          const double r2 = x.x * x.x + x.y * x.y;
          return 4.0 * x.x * x.y / (s2 * s2) * std::exp(-r2 / s2);
        },
        grid);
    return {alpha, normalized_to_velocity(std::move(z), spec.amplitude)};
  }
  if (spec.preset == "file") {
    const Snapshot s = read_snapshot(spec.file_path);
    if (s.kind != 0) throw Error("init file must hold a scalar vorticity");
    if (!(s.scalar.grid() == grid))
      throw Error("init file grid does not match the configured grid");
    return decompose_initial_data(s.scalar, cutoff);
  }
  throw Error("unknown init preset: " + spec.preset);
}

}  // namespace vortexlab
