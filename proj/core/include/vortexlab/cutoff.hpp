#ifndef VORTEXLAB_CUTOFF_HPP
#define VORTEXLAB_CUTOFF_HPP

namespace vortexlab {

/// Radially symmetric C^inf cut-off: 0 for r <= r_inner, 1 for r >= r_outer,
/// nondecreasing in between. Built from the classical exponential smoothstep
/// chi = sigma(1/(1-theta) - 1/theta), which has closed-form first and second
/// derivatives.
struct RadialCutoff {
  double r_inner = 1.0;
  double r_outer = 2.0;

  bool valid() const { return 0.0 < r_inner && r_inner < r_outer; }
};

struct CutoffValue {
  double chi;    // chi(r)
  double dchi;   // chi'(r)
  double d2chi;  // chi''(r)
};

CutoffValue cutoff_eval(double r, const RadialCutoff& c);

}  // namespace vortexlab

#endif
