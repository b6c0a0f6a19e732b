#include "vortexlab/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "vortexlab/diagnostics.hpp"
#include "vortexlab/norms.hpp"

namespace vortexlab {

namespace {

using Modes = Spectral::Modes;

/// Closed-form background bundle at one stage time. Everything the stepper
/// needs from alpha u^chi: the velocity samples, the analytic gradient of
/// omega^chi, and the spectral curl of the sampled remainder R^chi.
struct Background {
  double t = -1.0;
  VectorField uchi;
  VectorField grad_omchi;
  Modes rchi_hat;
  double uchi_inf = 0.0;
};

class Stepper {
 public:
  explicit Stepper(const SolverConfig& cfg)
      : cfg_(cfg), sp_(spectral_for(cfg.grid)) {}

  const SolverConfig& cfg() const { return cfg_; }
  const Spectral& sp() const { return sp_; }

  /// Nonstiff part of d/dt zeta_hat (everything except the Laplacian).
  Modes nonlinear(const Modes& zhat, double t, double* umax_out = nullptr) {
    const Grid& g = cfg_.grid;
    const double alpha = cfg_.params.alpha;

    const ScalarField vx = sp_.inverse(sp_.biot_savart_x(zhat));
    const ScalarField vy = sp_.inverse(sp_.biot_savart_y(zhat));
    const ScalarField gx = sp_.inverse(deriv(zhat, true));
    const ScalarField gy = sp_.inverse(deriv(zhat, false));

    const Background* bg = alpha != 0.0 ? &background(t) : nullptr;

    ScalarField nl(g);
    VectorField pen(cfg_.penalization ? g : Grid{});
    double umax = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      double ux = vx.values()[i];
      double uy = vy.values()[i];
      if (bg) {
        ux += alpha * bg->uchi.x().values()[i];
        uy += alpha * bg->uchi.y().values()[i];
      }
      umax = std::max(umax, ux * ux + uy * uy);
      double n = -(ux * gx.values()[i] + uy * gy.values()[i]);
      if (bg) {
        n -= alpha * (vx.values()[i] * bg->grad_omchi.x().values()[i] +
                      vy.values()[i] * bg->grad_omchi.y().values()[i]);
      }
      nl.values()[i] = n;
      if (cfg_.penalization) {
        const double m =
            cfg_.penalization->mask.values()[i] / cfg_.penalization->epsilon;
        pen.x().values()[i] = m * ux;
        pen.y().values()[i] = m * uy;
      }
    }
    if (umax_out) *umax_out = std::sqrt(umax);

    Modes nhat = sp_.forward(nl);
    if (cfg_.penalization) {
      const Modes ph = sp_.curl_modes(pen);
      for (std::size_t i = 0; i < nhat.size(); ++i) nhat[i] -= ph[i];
    }
    // Only the quadratic products are dealiased. The closed-form forcing
    // is added afterwards: its near-grid-scale content sustains the
    // annulus features of the self-similar solution and must survive.
    if (cfg_.dealias) sp_.dealias(nhat);
    if (bg)
      for (std::size_t i = 0; i < nhat.size(); ++i)
        nhat[i] += alpha * bg->rchi_hat[i];
    nhat[0] = 0.0;  // circulation stays in the background
    return nhat;
  }

  Modes step_modes(const Modes& zhat, double t, double dt) {
    if (dt == 0.0) return zhat;
    ensure_multipliers(dt);

    double umax = 0.0;
    const Modes a = nonlinear(zhat, t, &umax);
    const double cfl = umax * dt / cfg_.grid.cell();
    if (cfl > cfg_.c_cfl) throw CflViolation(t, cfl);

    const double h2 = 0.5 * dt;
    Modes tmp(zhat.size());

    for (std::size_t i = 0; i < tmp.size(); ++i)
      tmp[i] = e_half_[i] * (zhat[i] + h2 * a[i]);
    const Modes b = nonlinear(tmp, t + h2);

    for (std::size_t i = 0; i < tmp.size(); ++i)
      tmp[i] = e_half_[i] * zhat[i] + h2 * b[i];
    const Modes c = nonlinear(tmp, t + h2);

    for (std::size_t i = 0; i < tmp.size(); ++i)
      tmp[i] = e_full_[i] * zhat[i] + dt * e_half_[i] * c[i];
    const Modes d = nonlinear(tmp, t + dt);

    Modes out(zhat.size());
    const double h6 = dt / 6.0;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = e_full_[i] * (zhat[i] + h6 * a[i]) +
               h6 * (2.0 * e_half_[i] * (b[i] + c[i]) + d[i]);
    out[0] = 0.0;

    for (const auto& m : out)
      if (!std::isfinite(m.real()) || !std::isfinite(m.imag()))
        throw NonFinite(t + dt);
    return out;
  }

  Modes deriv(const Modes& m, bool along_x) const {
    // Thin wrappers over the workspace; kept here so the stepper reads flat.
    const int n = cfg_.grid.n;
    const int nc = sp_.ncols();
    Modes out(m.size());
    for (int i = 0; i < n; ++i) {
      const double kyv = sp_.ky(i);
      for (int j = 0; j < nc; ++j) {
        const bool nyq = (j == n / 2) || (i == n / 2);
        const double k = along_x ? sp_.kx(j) : kyv;
        const auto c = m[std::size_t(i) * nc + j];
        out[std::size_t(i) * nc + j] =
            nyq ? std::complex<double>(0.0)
                : std::complex<double>(-k * c.imag(), k * c.real());
      }
    }
    return out;
  }

 private:
  void ensure_multipliers(double dt) {
    if (dt == mult_dt_) return;
    const int n = cfg_.grid.n;
    const int nc = sp_.ncols();
    e_half_.resize(sp_.nmodes());
    e_full_.resize(sp_.nmodes());
    for (int i = 0; i < n; ++i) {
      const double kyv = sp_.ky(i);
      for (int j = 0; j < nc; ++j) {
        const double k2 = sp_.kx(j) * sp_.kx(j) + kyv * kyv;
        e_half_[std::size_t(i) * nc + j] = std::exp(-k2 * 0.5 * dt);
        e_full_[std::size_t(i) * nc + j] = std::exp(-k2 * dt);
      }
    }
    mult_dt_ = dt;
  }

  const Background& background(double t) {
    for (const auto& b : bg_cache_)
      if (b.t == t) return b;
    Background b;
    b.t = t;
    const Grid& g = cfg_.grid;
    b.uchi = VectorField(g);
    b.grad_omchi = VectorField(g);
    ScalarField omch(g), omch_t(g);
    double gmax = 0.0;
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix) {
        const Vec2 x = g.node(ix, iy);
        const double r = std::hypot(x.x, x.y);
        const double gg = radial::uchi_g(r, t, cfg_.cutoff);
        b.uchi.x().at(ix, iy) = -x.y * gg;
        b.uchi.y().at(ix, iy) = x.x * gg;
        gmax = std::max(gmax, r * std::fabs(gg));
        const double wp = r > 1e-12
                              ? radial::omega_chi_prime(r, t, cfg_.cutoff) / r
                              : 0.0;
        b.grad_omchi.x().at(ix, iy) = x.x * wp;
        b.grad_omchi.y().at(ix, iy) = x.y * wp;
        omch.at(ix, iy) = radial::omega_chi(r, t, cfg_.cutoff);
        omch_t.at(ix, iy) = radial::omega_chi_tdot(r, t, cfg_.cutoff);
      }
    b.uchi_inf = gmax;
    // curl R^chi = Lap omega^chi - dt omega^chi, with the Laplacian taken
    // spectrally: its truncation error then cancels the one of Lap zeta in
    // the recomposed vorticity, which is what keeps marginally resolved
    // cut-off features from polluting the dynamics.
    b.rchi_hat = sp_.forward(omch);
    const Modes omch_t_hat = sp_.forward(omch_t);
    const int nc = sp_.ncols();
    for (int i = 0; i < g.n; ++i) {
      const double kyv = sp_.ky(i);
      for (int j = 0; j < nc; ++j) {
        const double k2 = sp_.kx(j) * sp_.kx(j) + kyv * kyv;
        const std::size_t m = std::size_t(i) * nc + j;
        b.rchi_hat[m] = -k2 * b.rchi_hat[m] - omch_t_hat[m];
      }
    }
    // Tiny rotating cache: RK stages revisit t and t + dt/2 patterns.
    bg_cache_[bg_next_] = std::move(b);
    const Background& ref = bg_cache_[bg_next_];
    bg_next_ = (bg_next_ + 1) % bg_cache_.size();
    return ref;
  }

  SolverConfig cfg_;
  const Spectral& sp_;
  std::vector<double> e_half_, e_full_;
  double mult_dt_ = -1.0;
  std::array<Background, 3> bg_cache_;
  std::size_t bg_next_ = 0;
};

Modes prepare_modes(const ScalarField& zeta, const Spectral& sp) {
  // The state itself is never truncated: sampled initial data is exact at
  // the nodes and truncation would discard marginally resolved features.
  Modes zhat = sp.forward(zeta);
  zhat[0] = 0.0;
  return zhat;
}

}  // namespace

std::pair<double, ScalarField> decompose_initial_data(
    const ScalarField& omega0, const RadialCutoff& cutoff) {
  if (!all_finite(omega0)) throw Error("decompose: non-finite vorticity");
  const double alpha = total_circulation(omega0);
  ScalarField zeta0 = omega0;
  if (alpha != 0.0) {
    const ScalarField bg = sample(
        [&](Vec2 x) {
          return truncated_vorticity({x, 0.0}, cutoff);
        },
        omega0.grid());
    axpy(-alpha, bg, zeta0);
  }
  return {alpha, std::move(zeta0)};
}

ScalarField rhs(const SolverState& state, const SolverConfig& cfg) {
  Stepper st(cfg);
  const Spectral& sp = st.sp();
  Modes zhat = prepare_modes(state.zeta, sp);

  double umax = 0.0;
  Modes nhat = st.nonlinear(zhat, state.t, &umax);
  if (umax * cfg.dt / cfg.grid.cell() > cfg.c_cfl)
    throw CflViolation(state.t, umax * cfg.dt / cfg.grid.cell());

  const int n = cfg.grid.n;
  const int nc = sp.ncols();
  for (int i = 0; i < n; ++i) {
    const double kyv = sp.ky(i);
    for (int j = 0; j < nc; ++j) {
      const double k2 = sp.kx(j) * sp.kx(j) + kyv * kyv;
      nhat[std::size_t(i) * nc + j] -= k2 * zhat[std::size_t(i) * nc + j];
    }
  }
  return sp.inverse(nhat);
}

SolverState step(const SolverState& state, const SolverConfig& cfg) {
  Stepper st(cfg);
  Modes zhat = prepare_modes(state.zeta, st.sp());
  zhat = st.step_modes(zhat, state.t, cfg.dt);
  return {state.t + cfg.dt, st.sp().inverse(zhat)};
}

Trajectory run(const SolverConfig& cfg,
               const std::pair<double, ScalarField>& init,
               const RunOptions& opts) {
  SolverConfig rc = cfg;
  rc.params.alpha = init.first;
  if (!(rc.dt > 0.0)) throw Error("run: dt must be positive");
  if (!(rc.t_end >= 0.0)) throw Error("run: t_end must be nonnegative");
  if (!(opts.diag_interval > 0.0))
    throw Error("run: diag_interval must be positive");

  Stepper st(rc);
  const Spectral& sp = st.sp();
  Modes zhat = prepare_modes(init.second, sp);

  Trajectory traj;
  double t = 0.0;
  double diss = 0.0;
  double g2_prev = 0.0;
  double t_prev = 0.0;

  auto emit = [&](bool initial) {
    SolverState s{t, sp.inverse(zhat)};
    const double g2 = [&] {
      const double h1 = sp.l2_norm(sp.forward(s.zeta));
      return h1 * h1;
    }();
    if (!initial) diss += 0.5 * (g2_prev + g2) * (t - t_prev);
    g2_prev = g2;
    t_prev = t;
    traj.records.push_back(record(s, rc, diss));
    if (opts.observer) opts.observer(s);
  };

  emit(true);
  const double eps = 1e-9 * std::max(rc.dt, 1.0);
  long next_rec = 1;
  while (t < rc.t_end - eps) {
    const double dt = std::min(rc.dt, rc.t_end - t);
    zhat = st.step_modes(zhat, t, dt);
    t += dt;
    if (t >= next_rec * opts.diag_interval - eps || t >= rc.t_end - eps) {
      emit(false);
      next_rec = long(std::floor((t + eps) / opts.diag_interval)) + 1;
    } else if (opts.observer) {
      opts.observer({t, sp.inverse(zhat)});
    }
  }
  return traj;
}

}  // namespace vortexlab
