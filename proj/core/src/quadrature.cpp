#include "vortexlab/quadrature.hpp"

#include <cmath>

namespace vortexlab {

namespace {

// Kronrod-15 abscissae on [0,1] (symmetric) and weights; Gauss-7 weights
// apply to the odd-indexed Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double k15;
  double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resg = 0.0, resk = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    const double f1 = f(c - dx);
    const double f2 = (i == 7) ? 0.0 : f(c + dx);
    const double fsum = (i == 7) ? f1 : f1 + f2;
    resk += kWgk[i] * fsum;
    // Gauss-7 lives on the odd Kronrod nodes plus the center (i == 7).
    if (i % 2 == 1 || i == 7) resg += kWg[i / 2] * fsum;
  }
  return {resk * h, std::fabs(resk - resg) * h};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, QuadratureResult& acc) {
  const Panel p = gk15(f, a, b);
  if (p.err <= tol || depth <= 0) {
    if (p.err > tol)
      throw QuadratureNotConverged("adaptive quadrature depth exhausted");
    acc.value += p.k15;
    acc.error += p.err;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, tol * 0.5, depth - 1, acc);
  adapt(f, c, b, tol * 0.5, depth - 1, acc);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, double abs_tol,
                           int max_depth) {
  if (a == b) return {0.0, 0.0};
  const Panel whole = gk15(f, a, b);
  const double tol =
      std::max(abs_tol, rel_tol * std::max(std::fabs(whole.k15), 1e-300));
  QuadratureResult acc;
  adapt(f, a, b, tol, max_depth, acc);
  return acc;
}

}  // namespace vortexlab
