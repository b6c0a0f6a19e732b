#ifndef VORTEXLAB_CSV_HPP
#define VORTEXLAB_CSV_HPP

#include <string>
#include <vector>

#include "vortexlab/records.hpp"

namespace vortexlab {

inline constexpr int kTrajectorySchemaVersion = 1;

/// Writes a trajectory CSV. Leading '#' lines carry schema_version and the
/// supplied header entries (typically the resolved config); the column
/// order is fixed by the schema.
void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          const std::vector<std::string>& header);

/// Reads a file written by write_trajectory_csv. Rejects mismatched
/// schema_version or column headers.
Trajectory read_trajectory_csv(const std::string& path);

}  // namespace vortexlab

#endif
