#ifndef VORTEXLAB_RECORDS_HPP
#define VORTEXLAB_RECORDS_HPP

#include <vector>

namespace vortexlab {

/// One diagnostics row. Column order matches the trajectory CSV schema.
struct DiagnosticRecord {
  double t = 0.0;
  double l2_v = 0.0;           // ||v||_L2
  double h1_v = 0.0;           // ||grad v||_L2
  double l2_dist_oseen = 0.0;  // ||u - alpha Theta||_L2
  double h1_dist_oseen = 0.0;  // ||grad u - alpha grad Theta||_L2
  double l1_vort_dist = 0.0;   // ||omega - alpha Xi||_L1
  double tail_mass = 0.0;
  double circulation = 0.0;
  double dissipation_integral = 0.0;  // running trapezoid of h1_v^2
  bool tail_radius_clipped = false;   // sqrt(t) log t reached the box
};

struct Trajectory {
  std::vector<DiagnosticRecord> records;
};

struct RateFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double residual = 0.0;  // RMS in log space
  enum class Model { kPower, kPowerLog } model = Model::kPower;
};

}  // namespace vortexlab

#endif
