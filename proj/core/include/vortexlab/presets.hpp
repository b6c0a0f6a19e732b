#ifndef VORTEXLAB_PRESETS_HPP
#define VORTEXLAB_PRESETS_HPP

#include <string>
#include <utility>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// Initial perturbation presets.
///   oseen      zeta0 = amplitude * (Xi - omega^chi)(.,0); with
///              amplitude = alpha this makes u0 = alpha Theta(.,0).
///   dipole     derivative-of-Gaussian vorticity, scaled so the induced
///              velocity has ||v0||_L2 = amplitude.
///   quadrupole mixed second derivative of a Gaussian, same normalization.
///   file       scalar snapshot holding full omega0; it is decomposed and
///              the returned alpha overrides the configured one.
struct InitSpec {
  std::string preset = "dipole";
  double amplitude = 1.0;
  std::string file_path;
};

/// Returns (alpha, zeta0). For the analytic presets alpha passes through
/// unchanged; the file preset derives it from the stored vorticity.
std::pair<double, ScalarField> make_initial_data(const InitSpec& spec,
                                                 const Grid& grid,
                                                 const RadialCutoff& cutoff,
                                                 double alpha);

}  // namespace vortexlab

#endif
