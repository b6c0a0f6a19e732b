#include "vortexlab/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

namespace vortexlab {

namespace {

constexpr char kMagic[8] = {'V', 'L', 'S', 'N', 'A', 'P', '0', '1'};

void write_header(std::ofstream& os, const Grid& g, int kind, double t) {
  os.write(kMagic, 8);
  const std::uint32_t n = std::uint32_t(g.n);
  const std::uint32_t k = std::uint32_t(kind);
  os.write(reinterpret_cast<const char*>(&n), 4);
  os.write(reinterpret_cast<const char*>(&k), 4);
  os.write(reinterpret_cast<const char*>(&g.half_width), 8);
  os.write(reinterpret_cast<const char*>(&t), 8);
}

void write_block(std::ofstream& os, const std::vector<double>& v) {
  os.write(reinterpret_cast<const char*>(v.data()),
           std::streamsize(v.size() * sizeof(double)));
}

void read_block(std::ifstream& is, std::vector<double>& v) {
  is.read(reinterpret_cast<char*>(v.data()),
          std::streamsize(v.size() * sizeof(double)));
}

}  // namespace

void write_snapshot(const std::string& path, const ScalarField& f, double t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("snapshot: cannot open " + path + " for writing");
  write_header(os, f.grid(), 0, t);
  write_block(os, f.values());
  if (!os) throw IoError("snapshot: write failed for " + path);
}

void write_snapshot(const std::string& path, const VectorField& u, double t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("snapshot: cannot open " + path + " for writing");
  write_header(os, u.grid(), 1, t);
  write_block(os, u.x().values());
  write_block(os, u.y().values());
  if (!os) throw IoError("snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("snapshot: cannot open " + path);
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw IoError("snapshot: bad magic in " + path);
  std::uint32_t n = 0, kind = 0;
  double half_width = 0.0, t = 0.0;
  is.read(reinterpret_cast<char*>(&n), 4);
  is.read(reinterpret_cast<char*>(&kind), 4);
  is.read(reinterpret_cast<char*>(&half_width), 8);
  is.read(reinterpret_cast<char*>(&t), 8);
  if (!is || kind > 1) throw IoError("snapshot: bad header in " + path);
  const Grid g(int(n), half_width);
  Snapshot s;
  s.t = t;
  s.kind = int(kind);
  if (kind == 0) {
    s.scalar = ScalarField(g);
    read_block(is, s.scalar.values());
  } else {
    s.vector = VectorField(g);
    read_block(is, s.vector.x().values());
    read_block(is, s.vector.y().values());
  }
  if (!is) throw IoError("snapshot: truncated payload in " + path);
  return s;
}

}  // namespace vortexlab
