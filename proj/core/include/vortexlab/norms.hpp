#ifndef VORTEXLAB_NORMS_HPP
#define VORTEXLAB_NORMS_HPP

#include <functional>
#include <limits>
#include <optional>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// Optional integration region; nodes where the predicate is false are
/// excluded from the cell-sum.
using RegionMask = std::function<bool(Vec2)>;

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Cell-sum L^p quadrature norm, p in [1, inf]. p = inf returns the max of
/// the pointwise magnitude over the region.
double lp_norm(const ScalarField& f, double p,
               const std::optional<RegionMask>& mask = std::nullopt);
double lp_norm(const VectorField& u, double p,
               const std::optional<RegionMask>& mask = std::nullopt);

/// sup over lambda of lambda * meas{|u| > lambda}^(1/2), evaluated exactly
/// for the piecewise-constant cell field via the sorted rearrangement.
double weak_l2_quasinorm(const VectorField& u);

/// alpha = cell-sum of omega.
double total_circulation(const ScalarField& omega);

}  // namespace vortexlab

#endif
