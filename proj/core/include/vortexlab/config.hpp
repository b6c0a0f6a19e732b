#ifndef VORTEXLAB_CONFIG_HPP
#define VORTEXLAB_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vortexlab {

/// Experiment description parsed from an INI-style file. See
/// docs/FORMATS.md for the schema; unknown sections or keys are rejected.
struct ExperimentConfig {
  struct {
    int n = 128;
    double half_width = 40.0;
  } grid;
  struct {
    double dt = 0.01;
    double t_end = 1.0;
    double diag_interval = 0.1;
  } time;
  struct {
    double alpha = 0.0;
    double r_inner = 1.0;
    double r_outer = 2.0;
  } vortex;
  struct {
    std::string preset = "dipole";
    double amplitude = 1.0;
    std::string file_path;
  } init;
  struct {
    bool enabled = false;
    double epsilon = 1e-2;
    double obstacle_radius = 0.5;
  } penalization;
  struct {
    std::string dir = "out";
    std::vector<double> snapshot_times;
  } output;
  struct {
    std::string kind = "run";
    double q = 4.0 / 3.0;
    std::uint64_t seed = 1;
  } study;
};

/// Parses and validates; every violation is collected so SchemaError lists
/// all offending "section.key" entries at once.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

/// Canonical one-line-per-key rendering of the resolved config, embedded in
/// output headers so every artifact records how it was produced.
std::vector<std::string> serialize_config(const ExperimentConfig& cfg);

}  // namespace vortexlab

#endif
