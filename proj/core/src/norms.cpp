#include "vortexlab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace vortexlab {

namespace {

template <class MagAt>
double lp_impl(const Grid& g, double p, const std::optional<RegionMask>& mask,
               MagAt mag) {
  if (!(p >= 1.0)) throw Error("lp_norm: p must be in [1, inf]");
  const bool inf = std::isinf(p);
  double acc = 0.0;
  for (int iy = 0; iy < g.n; ++iy)
    for (int ix = 0; ix < g.n; ++ix) {
      if (mask && !(*mask)(g.node(ix, iy))) continue;
      const double m = mag(ix, iy);
      if (inf)
        acc = std::max(acc, m);
      else
        acc += std::pow(m, p);
    }
  if (inf) return acc;
  return std::pow(acc * g.cell_area(), 1.0 / p);
}

}  // namespace

double lp_norm(const ScalarField& f, double p,
               const std::optional<RegionMask>& mask) {
  return lp_impl(f.grid(), p, mask,
                 [&](int ix, int iy) { return std::fabs(f.at(ix, iy)); });
}

double lp_norm(const VectorField& u, double p,
               const std::optional<RegionMask>& mask) {
  return lp_impl(u.grid(), p, mask, [&](int ix, int iy) {
    return std::hypot(u.x().at(ix, iy), u.y().at(ix, iy));
  });
}

double weak_l2_quasinorm(const VectorField& u) {
  const auto& ux = u.x().values();
  const auto& uy = u.y().values();
  std::vector<double> mag(ux.size());
  for (std::size_t i = 0; i < ux.size(); ++i)
    mag[i] = std::hypot(ux[i], uy[i]);
  std::sort(mag.begin(), mag.end(), std::greater<>());
  const double area = u.grid().cell_area();
  double best = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    if (mag[k] == 0.0) break;  // sorted: nothing larger follows
    best = std::max(best, mag[k] * std::sqrt(double(k + 1) * area));
  }
  return best;
}

double total_circulation(const ScalarField& omega) {
  double s = 0.0;
  for (double v : omega.values()) s += v;
  return s * omega.grid().cell_area();
}

}  // namespace vortexlab
