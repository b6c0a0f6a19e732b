#include "vortexlab/field.hpp"

#include <cmath>

namespace vortexlab {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int n_, double half_width_) : n(n_), half_width(half_width_) {
  if (n < 16 || !power_of_two(n))
    throw Error("grid: n must be a power of two >= 16");
  if (!(half_width > 0.0)) throw Error("grid: half_width must be positive");
}

VectorField::VectorField(ScalarField fx, ScalarField fy)
    : x_(std::move(fx)), y_(std::move(fy)) {
  if (!(x_.grid() == y_.grid()))
    throw Error("vector field components must share one grid");
}

ScalarField sample(const std::function<double(Vec2)>& f, const Grid& g) {
  ScalarField out(g);
  for (int iy = 0; iy < g.n; ++iy)
    for (int ix = 0; ix < g.n; ++ix) out.at(ix, iy) = f(g.node(ix, iy));
  return out;
}

VectorField sample(const std::function<Vec2(Vec2)>& f, const Grid& g) {
  VectorField out(g);
  for (int iy = 0; iy < g.n; ++iy)
    for (int ix = 0; ix < g.n; ++ix) {
      const Vec2 v = f(g.node(ix, iy));
      out.x().at(ix, iy) = v.x;
      out.y().at(ix, iy) = v.y;
    }
  return out;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
  if (!(x.grid() == y.grid())) throw Error("axpy: grid mismatch");
  const auto& xv = x.values();
  auto& yv = y.values();
  for (std::size_t i = 0; i < yv.size(); ++i) yv[i] += a * xv[i];
}

void axpy(double a, const VectorField& x, VectorField& y) {
  axpy(a, x.x(), y.x());
  axpy(a, x.y(), y.y());
}

void scale(ScalarField& f, double a) {
  for (double& v : f.values()) v *= a;
}

bool all_finite(const ScalarField& f) {
  for (double v : f.values())
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace vortexlab
