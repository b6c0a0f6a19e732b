#include "vortexlab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "vortexlab/error.hpp"

namespace vortexlab {

namespace {

const char* kColumns =
    "t,l2_v,h1_v,l2_dist_oseen,h1_dist_oseen,l1_vort_dist,tail_mass,"
    "circulation,dissipation_integral";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, const std::string& path,
                          const std::vector<std::string>& header) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << "# schema_version=" << kTrajectorySchemaVersion << "\n";
  for (const auto& line : header) f << "# " << line << "\n";
  f << kColumns << "\n";
  for (const auto& r : traj.records)
    f << fmt(r.t) << ',' << fmt(r.l2_v) << ',' << fmt(r.h1_v) << ','
      << fmt(r.l2_dist_oseen) << ',' << fmt(r.h1_dist_oseen) << ','
      << fmt(r.l1_vort_dist) << ',' << fmt(r.tail_mass) << ','
      << fmt(r.circulation) << ',' << fmt(r.dissipation_integral) << "\n";
  if (!f) throw IoError("short write to " + path);
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);

  Trajectory traj;
  std::string line;
  bool saw_version = false, saw_columns = false;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string want =
          "# schema_version=" + std::to_string(kTrajectorySchemaVersion);
      if (line.rfind("# schema_version=", 0) == 0) {
        if (line != want)
          throw IoError("unsupported trajectory schema in " + path);
        saw_version = true;
      }
      continue;
    }
    if (!saw_columns) {
      if (line != kColumns)
        throw IoError("unexpected column header in " + path);
      saw_columns = true;
      continue;
    }
    DiagnosticRecord r;
    double* fields[] = {&r.t,           &r.l2_v,
                        &r.h1_v,        &r.l2_dist_oseen,
                        &r.h1_dist_oseen, &r.l1_vort_dist,
                        &r.tail_mass,   &r.circulation,
                        &r.dissipation_integral};
    std::istringstream cells(line);
    std::string cell;
    for (double* field : fields) {
      if (!std::getline(cells, cell, ','))
        throw IoError("truncated row in " + path + ": " + line);
      *field = std::stod(cell);
    }
    traj.records.push_back(r);
  }
  if (!saw_version || !saw_columns)
    throw IoError(path + " is not a trajectory CSV");
  return traj;
}

}  // namespace vortexlab
