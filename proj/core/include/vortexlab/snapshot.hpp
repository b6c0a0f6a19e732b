#ifndef VORTEXLAB_SNAPSHOT_HPP
#define VORTEXLAB_SNAPSHOT_HPP

#include <string>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// Field snapshot file. Byte layout (little-endian, see docs/FORMATS.md):
///   8 bytes  magic "VLSNAP01"
///   u32      n
///   u32      kind (0 = scalar, 1 = vector)
///   f64      half_width
///   f64      t
///   f64[...] values, row-major x-fastest; vector files store the full
///            x-component block then the y-component block.
struct Snapshot {
  double t = 0.0;
  int kind = 0;
  ScalarField scalar;  // kind 0
  VectorField vector;  // kind 1
};

void write_snapshot(const std::string& path, const ScalarField& f, double t);
void write_snapshot(const std::string& path, const VectorField& u, double t);
Snapshot read_snapshot(const std::string& path);

}  // namespace vortexlab

#endif
