#include "vortexlab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>

namespace vortexlab {

struct Spectral::Impl {
  double* real = nullptr;
  fftw_complex* cplx = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

Spectral::Spectral(const Grid& g)
    : grid_(g),
      k0_(3.14159265358979323846 / g.half_width),
      impl_(std::make_unique<Impl>()) {
  const int n = g.n;
  impl_->real = fftw_alloc_real(std::size_t(n) * n);
  impl_->cplx = fftw_alloc_complex(std::size_t(n) * (n / 2 + 1));
  // FFTW_ESTIMATE keeps plan selection deterministic across runs.
  impl_->fwd = fftw_plan_dft_r2c_2d(n, n, impl_->real, impl_->cplx,
                                    FFTW_ESTIMATE);
  impl_->bwd = fftw_plan_dft_c2r_2d(n, n, impl_->cplx, impl_->real,
                                    FFTW_ESTIMATE);
  if (!impl_->fwd || !impl_->bwd) throw Error("fftw plan creation failed");
}

Spectral::~Spectral() {
  if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
  if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
  if (impl_->real) fftw_free(impl_->real);
  if (impl_->cplx) fftw_free(impl_->cplx);
}

Spectral::Modes Spectral::forward(const ScalarField& f) const {
  if (!(f.grid() == grid_)) throw Error("spectral: grid mismatch");
  const std::size_t nn = grid_.size();
  std::memcpy(impl_->real, f.values().data(), nn * sizeof(double));
  fftw_execute(impl_->fwd);
  Modes out(nmodes());
  const double norm = 1.0 / double(nn);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = {impl_->cplx[i][0] * norm, impl_->cplx[i][1] * norm};
  return out;
}

ScalarField Spectral::inverse(const Modes& m) const {
  if (m.size() != nmodes()) throw Error("spectral: mode count mismatch");
  for (std::size_t i = 0; i < m.size(); ++i) {
    impl_->cplx[i][0] = m[i].real();
    impl_->cplx[i][1] = m[i].imag();
  }
  fftw_execute(impl_->bwd);
  ScalarField out(grid_);
  std::memcpy(out.values().data(), impl_->real,
              grid_.size() * sizeof(double));
  return out;
}

Spectral::Modes Spectral::derivative(const Modes& m, bool along_x) const {
  const int n = grid_.n;
  const int nc = ncols();
  Modes out(m.size());
  for (int i = 0; i < n; ++i) {
    const double kyv = ky(i);
    for (int j = 0; j < nc; ++j) {
      // Nyquist modes carry no usable sign information for odd derivatives.
      const bool nyq = (j == n / 2) || (i == n / 2);
      const double k = along_x ? kx(j) : kyv;
      const auto c = m[std::size_t(i) * nc + j];
      out[std::size_t(i) * nc + j] =
          nyq ? std::complex<double>(0.0, 0.0)
              : std::complex<double>(-k * c.imag(), k * c.real());
    }
  }
  return out;
}

Spectral::Modes Spectral::biot_savart_x(const Modes& omega_hat) const {
  const int n = grid_.n;
  const int nc = ncols();
  Modes out(omega_hat.size());
  for (int i = 0; i < n; ++i) {
    const double kyv = ky(i);
    for (int j = 0; j < nc; ++j) {
      const double kxv = kx(j);
      const double k2 = kxv * kxv + kyv * kyv;
      const std::size_t idx = std::size_t(i) * nc + j;
      if (k2 == 0.0 || j == n / 2 || i == n / 2) {
        out[idx] = 0.0;
        continue;
      }
      // u_x = -d/dy psi, psi_hat = -omega_hat / k^2  =>  u_x = i ky w / k^2
      const auto w = omega_hat[idx];
      out[idx] = {-kyv * w.imag() / k2, kyv * w.real() / k2};
    }
  }
  return out;
}

Spectral::Modes Spectral::biot_savart_y(const Modes& omega_hat) const {
  const int n = grid_.n;
  const int nc = ncols();
  Modes out(omega_hat.size());
  for (int i = 0; i < n; ++i) {
    const double kyv = ky(i);
    for (int j = 0; j < nc; ++j) {
      const double kxv = kx(j);
      const double k2 = kxv * kxv + kyv * kyv;
      const std::size_t idx = std::size_t(i) * nc + j;
      if (k2 == 0.0 || j == n / 2 || i == n / 2) {
        out[idx] = 0.0;
        continue;
      }
      const auto w = omega_hat[idx];
      out[idx] = {kxv * w.imag() / k2, -kxv * w.real() / k2};
    }
  }
  return out;
}

VectorField Spectral::biot_savart(const ScalarField& omega) const {
  double sum = 0.0, l1 = 0.0;
  for (double v : omega.values()) {
    sum += v;
    l1 += std::fabs(v);
  }
  const double area = grid_.cell_area();
  if (std::fabs(sum) * area > 1e-8 * l1 * area)
    throw MeanNotZero("biot_savart: vorticity carries circulation " +
                      std::to_string(sum * area));
  const Modes w = forward(omega);
  return {inverse(biot_savart_x(w)), inverse(biot_savart_y(w))};
}

Spectral::Modes Spectral::curl_modes(const VectorField& u) const {
  const Modes dx_uy = derivative(forward(u.y()), true);
  Modes dy_ux = derivative(forward(u.x()), false);
  Modes out(dx_uy.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dx_uy[i] - dy_ux[i];
  return out;
}

ScalarField Spectral::curl(const VectorField& u) const {
  return inverse(curl_modes(u));
}

VectorField Spectral::gradient(const ScalarField& f) const {
  const Modes m = forward(f);
  return {inverse(derivative(m, true)), inverse(derivative(m, false))};
}

ScalarField Spectral::divergence(const VectorField& u) const {
  const Modes dx = derivative(forward(u.x()), true);
  Modes dy = derivative(forward(u.y()), false);
  for (std::size_t i = 0; i < dy.size(); ++i) dy[i] += dx[i];
  return inverse(dy);
}

void Spectral::dealias(Modes& m) const {
  const int n = grid_.n;
  const int nc = ncols();
  const int cut = n / 3;
  for (int i = 0; i < n; ++i) {
    const int myi = i <= n / 2 ? i : n - i;
    for (int j = 0; j < nc; ++j)
      if (j > cut || myi > cut) m[std::size_t(i) * nc + j] = 0.0;
  }
}

double Spectral::l2_norm(const Modes& m) const {
  const int n = grid_.n;
  const int nc = ncols();
  const double box = 4.0 * grid_.half_width * grid_.half_width;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < nc; ++j) {
      const double w = (j == 0 || j == n / 2) ? 1.0 : 2.0;  // conjugate pair
      s += w * std::norm(m[std::size_t(i) * nc + j]);
    }
  return std::sqrt(s * box);
}

double Spectral::h1_seminorm(const Modes& m) const {
  const int n = grid_.n;
  const int nc = ncols();
  const double box = 4.0 * grid_.half_width * grid_.half_width;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double kyv = ky(i);
    for (int j = 0; j < nc; ++j) {
      const double w = (j == 0 || j == n / 2) ? 1.0 : 2.0;
      const double k2 = kx(j) * kx(j) + kyv * kyv;
      s += w * k2 * std::norm(m[std::size_t(i) * nc + j]);
    }
  }
  return std::sqrt(s * box);
}

const Spectral& spectral_for(const Grid& g) {
  thread_local std::map<std::pair<int, double>, std::unique_ptr<Spectral>>
      cache;
  auto key = std::make_pair(g.n, g.half_width);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Spectral>(g)).first;
  return *it->second;
}

VectorField biot_savart(const ScalarField& omega) {
  return spectral_for(omega.grid()).biot_savart(omega);
}

ScalarField curl(const VectorField& u) {
  return spectral_for(u.grid()).curl(u);
}

}  // namespace vortexlab
