#ifndef VORTEXLAB_QUADRATURE_HPP
#define VORTEXLAB_QUADRATURE_HPP

#include <functional>

#include "vortexlab/error.hpp"

namespace vortexlab {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated Kronrod error estimate
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a, b]. Bisects until the local
/// error estimate meets max(abs_tol, rel_tol * |integral|) spread over the
/// interval; throws QuadratureNotConverged past the depth limit.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-12,
                           double abs_tol = 1e-15, int max_depth = 48);

}  // namespace vortexlab

#endif
