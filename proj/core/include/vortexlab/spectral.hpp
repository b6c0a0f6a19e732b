#ifndef VORTEXLAB_SPECTRAL_HPP
#define VORTEXLAB_SPECTRAL_HPP

#include <complex>
#include <memory>
#include <vector>

#include "vortexlab/field.hpp"

namespace vortexlab {

/// FFT workspace for one grid. Holds FFTW plans; transforms copy through
/// internal buffers so inputs stay untouched. Coefficients are normalized
/// (f = sum c_k exp(i k.x)) and stored in r2c half-plane layout,
/// row-major (ky index, kx index), kx = 0..n/2.
class Spectral {
 public:
  using Modes = std::vector<std::complex<double>>;

  explicit Spectral(const Grid& g);
  ~Spectral();
  Spectral(const Spectral&) = delete;
  Spectral& operator=(const Spectral&) = delete;

  const Grid& grid() const { return grid_; }
  int ncols() const { return grid_.n / 2 + 1; }
  std::size_t nmodes() const { return std::size_t(grid_.n) * ncols(); }

  /// Physical wavenumbers; fundamental is pi / half_width.
  double kx(int j) const { return k0_ * j; }
  double ky(int i) const { return k0_ * (i <= grid_.n / 2 ? i : i - grid_.n); }

  Modes forward(const ScalarField& f) const;
  ScalarField inverse(const Modes& m) const;

  /// u = grad^perp(Laplace^{-1} omega); requires a (numerically) mean-free
  /// omega, since the zero mode of the stream function is pinned to 0.
  /// Throws MeanNotZero otherwise.
  VectorField biot_savart(const ScalarField& omega) const;
  Modes biot_savart_x(const Modes& omega_hat) const;
  Modes biot_savart_y(const Modes& omega_hat) const;

  ScalarField curl(const VectorField& u) const;
  Modes curl_modes(const VectorField& u) const;
  VectorField gradient(const ScalarField& f) const;
  ScalarField divergence(const VectorField& u) const;

  /// 2/3-rule truncation, in place.
  void dealias(Modes& m) const;

  /// Parseval sums over the box [-L,L)^2.
  double l2_norm(const Modes& m) const;
  double h1_seminorm(const Modes& m) const;

 private:
  Modes derivative(const Modes& m, bool along_x) const;

  Grid grid_;
  double k0_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Shared per-grid workspace (thread-local cache).
const Spectral& spectral_for(const Grid& g);

// Free-function forms of the spec'd operations.
VectorField biot_savart(const ScalarField& omega);
ScalarField curl(const VectorField& u);

}  // namespace vortexlab

#endif
