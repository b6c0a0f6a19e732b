#ifndef VORTEXLAB_FIELD_HPP
#define VORTEXLAB_FIELD_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "vortexlab/error.hpp"
#include "vortexlab/profiles.hpp"

namespace vortexlab {

/// Uniform periodic grid on [-L, L)^2 with n nodes per side (power of two).
struct Grid {
  int n = 0;
  double half_width = 0.0;

  Grid() = default;
  Grid(int n_, double half_width_);

  double cell() const { return 2.0 * half_width / n; }
  double cell_area() const { return cell() * cell(); }
  double coord(int i) const { return -half_width + i * cell(); }
  Vec2 node(int ix, int iy) const { return {coord(ix), coord(iy)}; }
  std::size_t size() const { return std::size_t(n) * std::size_t(n); }

  bool operator==(const Grid&) const = default;
};

/// Real scalar samples, row-major with x fastest.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid_(g), v_(g.size(), 0.0) {}

  const Grid& grid() const { return grid_; }
  double& at(int ix, int iy) { return v_[std::size_t(iy) * grid_.n + ix]; }
  double at(int ix, int iy) const { return v_[std::size_t(iy) * grid_.n + ix]; }
  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }

 private:
  Grid grid_;
  std::vector<double> v_;
};

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(const Grid& g) : x_(g), y_(g) {}
  VectorField(ScalarField fx, ScalarField fy);

  const Grid& grid() const { return x_.grid(); }
  ScalarField& x() { return x_; }
  ScalarField& y() { return y_; }
  const ScalarField& x() const { return x_; }
  const ScalarField& y() const { return y_; }

 private:
  ScalarField x_, y_;
};

ScalarField sample(const std::function<double(Vec2)>& f, const Grid& g);
VectorField sample(const std::function<Vec2(Vec2)>& f, const Grid& g);

// In-place linear algebra helpers; both operands must share one grid.
void axpy(double a, const ScalarField& x, ScalarField& y);
void axpy(double a, const VectorField& x, VectorField& y);
void scale(ScalarField& f, double a);

bool all_finite(const ScalarField& f);

}  // namespace vortexlab

#endif
