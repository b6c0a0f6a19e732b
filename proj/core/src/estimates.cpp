#include "vortexlab/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "vortexlab/diagnostics.hpp"
#include "vortexlab/profiles.hpp"
#include "vortexlab/quadrature.hpp"

namespace vortexlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Beyond 12.2 sqrt(1+t) the Gaussian factors are below 1e-16, so the
// truncated vortex matches its 1/r (velocity) and 1/r^2 (gradient)
// asymptotics to machine precision and tails integrate in closed form.
constexpr double kFarRadiusFactor = 12.2;

bool is_inf_p(double p) { return std::isinf(p) || p >= 1e300; }

/// Tracks the worst relative error estimate across all quadratures of a
/// verification pass.
struct QuadAcc {
  double rel_tol;
  double max_rel = 0.0;
  double err_sum = 0.0;

  double operator()(const std::function<double(double)>& f, double a,
                    double b) {
    const QuadratureResult r = integrate(f, a, b, rel_tol, 1e-18);
    err_sum += r.error;
    return r.value;
  }

  /// Records the accumulated error of the pieces making up one reported
  /// quantity, relative to that quantity.
  void note(double value) {
    if (value != 0.0) max_rel = std::max(max_rel, err_sum / std::fabs(value));
    err_sum = 0.0;
  }
};

/// Coarse scan followed by golden-section refinement around the best node.
double sup_scan(const std::function<double(double)>& f, double a, double b,
                int n) {
  double best = -1.0;
  int bi = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = a + (b - a) * i / n;
    const double v = f(x);
    if (v > best) {
      best = v;
      bi = i;
    }
  }
  double lo = a + (b - a) * std::max(0, bi - 1) / n;
  double hi = a + (b - a) * std::min(n, bi + 1) / n;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max({best, f1, f2});
}

double uchi_lp(double t, double p, const RadialCutoff& c,
               const EstimateOptions& opts, QuadAcc& quad) {
  const double T = 1.0 + t;
  const double far = std::max(c.r_outer, kFarRadiusFactor * std::sqrt(T));
  const auto mag = [&](double r) { return r * radial::uchi_g(r, t, c); };
  if (is_inf_p(p)) return sup_scan(mag, 0.0, far, opts.sup_scan_points);
  if (!(p > 2.0)) throw Error("uchi L^p norms need p > 2");
  // Integrate the self-similarly rescaled magnitude so the integral is O(1)
  // uniformly in t; otherwise large p and t drive it under the abs_tol floor.
  const double lam = std::sqrt(T);
  const auto f = [&](double r) {
    return 2.0 * kPi * r * std::pow(lam * std::fabs(mag(r)), p);
  };
  double ip = quad(f, c.r_inner, c.r_outer) + quad(f, c.r_outer, far);
  // |u^chi| = 1/(2 pi r) past `far` to machine precision.
  ip += std::pow(lam, p) * 2.0 * kPi * std::pow(2.0 * kPi, -p) *
        std::pow(far, 2.0 - p) / (p - 2.0);
  quad.note(ip);
  return std::pow(ip, 1.0 / p) / lam;
}

double grad_uchi_lp(double t, double p, const RadialCutoff& c,
                    const EstimateOptions& opts, QuadAcc& quad) {
  const double T = 1.0 + t;
  const double far = std::max(c.r_outer, kFarRadiusFactor * std::sqrt(T));
  const auto mag = [&](double r) {
    const double g = radial::uchi_g(r, t, c);
    const double gp = radial::uchi_g_prime(r, t, c);
    return std::sqrt(std::max(0.0, radial::grad_sq_of_tangential(g, gp, r)));
  };
  if (is_inf_p(p)) return sup_scan(mag, 0.0, far, opts.sup_scan_points);
  if (!(p > 1.0)) throw Error("grad u^chi L^p norms need p > 1");
  const double lam = T;
  const auto f = [&](double r) {
    return 2.0 * kPi * r * std::pow(lam * mag(r), p);
  };
  double ip = quad(f, c.r_inner, c.r_outer) + quad(f, c.r_outer, far);
  // |grad u^chi| = 1/(sqrt(2) pi r^2) past `far`.
  ip += std::pow(lam, p) * 2.0 * kPi * std::pow(std::sqrt(2.0) * kPi, -p) *
        std::pow(far, 2.0 - 2.0 * p) / (2.0 * p - 2.0);
  quad.note(ip);
  return std::pow(ip, 1.0 / p) / lam;
}

double rchi_lp(double t, double p, const RadialCutoff& c,
               const EstimateOptions& opts, QuadAcc& quad) {
  const auto mag = [&](double r) {
    return r * std::fabs(radial::remainder_q(r, t, c));
  };
  if (is_inf_p(p))
    return sup_scan(mag, c.r_inner, c.r_outer, opts.sup_scan_points);
  const double lam = 1.0 + t;
  const auto f = [&](double r) {
    return 2.0 * kPi * r * std::pow(lam * mag(r), p);
  };
  const double ip = quad(f, c.r_inner, c.r_outer);
  quad.note(ip);
  return std::pow(ip, 1.0 / p) / lam;
}

/// Check that a supremum over the t-grid is trustworthy: attained in the
/// interior, or at an end with shrinking increments toward that end.
void assert_stabilized(const std::vector<double>& vals, double p,
                       const char* what) {
  const auto it = std::max_element(vals.begin(), vals.end());
  if (it != vals.end() - 1) return;  // interior or t = 0 end: bounded
  const std::size_t n = vals.size();
  if (n < 3) throw Error("t_grid too short to certify the supremum");
  const double d1 = vals[n - 1] - vals[n - 2];
  const double d2 = vals[n - 2] - vals[n - 3];
  if (d1 <= d2 * 1.0001 && d1 < 0.05 * vals[n - 1]) return;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s supremum not stabilized at the end of the t-grid (p=%g)",
                what, p);
  throw Error(buf);
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct TrigField {
  static constexpr int kModes = 8;
  double amp[kModes], dirx[kModes], diry[kModes];
  double kx[kModes], ky[kModes], phase[kModes];

  void eval(double px, double py, double u[2], double grad[4]) const {
    u[0] = u[1] = grad[0] = grad[1] = grad[2] = grad[3] = 0.0;
    for (int m = 0; m < kModes; ++m) {
      const double th = kx[m] * px + ky[m] * py + phase[m];
      const double c = amp[m] * std::cos(th);
      const double s = amp[m] * std::sin(th);
      u[0] += dirx[m] * c;
      u[1] += diry[m] * c;
      grad[0] -= dirx[m] * kx[m] * s;  // d(u_x)/dx
      grad[1] -= dirx[m] * ky[m] * s;  // d(u_x)/dy
      grad[2] -= diry[m] * kx[m] * s;
      grad[3] -= diry[m] * ky[m] * s;
    }
  }
};

TrigField draw_field(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  TrigField f;
  for (int m = 0; m < TrigField::kModes; ++m) {
    f.amp[m] = uni(rng);
    const double d = ang(rng);
    f.dirx[m] = std::cos(d);
    f.diry[m] = std::sin(d);
    f.kx[m] = 3.0 * uni(rng);
    f.ky[m] = 3.0 * uni(rng);
    f.phase[m] = ang(rng);
  }
  return f;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_p(double p) { return is_inf_p(p) ? "inf" : fmt(p); }

}  // namespace

std::vector<double> default_t_grid() {
  return {0.0, 0.1, 0.31622776601683794, 1.0, 3.1622776601683795,
          10.0, 31.622776601683793, 100.0, 316.22776601683796, 1000.0};
}

std::vector<std::pair<double, double>> default_ts_pairs() {
  std::vector<std::pair<double, double>> pairs;
  for (double s : {0.0, 1.0, 10.0, 100.0})
    for (double ratio : {1.01, 1.1, 2.0, 5.0, 10.0, 100.0, 1000.0})
      pairs.emplace_back(ratio * (1.0 + s) - 1.0, s);
  return pairs;
}

EstimateReport verify_uchi_norm_bounds(const RadialCutoff& cutoff,
                                       const std::vector<double>& t_grid,
                                       const std::vector<double>& p_velocity,
                                       const std::vector<double>& p_gradient,
                                       const EstimateOptions& opts) {
  if (t_grid.size() < 2) throw Error("t_grid needs at least two points");
  QuadAcc quad{opts.quad_rel_tol};
  EstimateReport rep;
  rep.t_grid = t_grid;
  rep.p_list_velocity = p_velocity;
  rep.p_list_gradient = p_gradient;

  for (double p : p_velocity) {
    std::vector<double> vals;
    for (double t : t_grid) {
      const double norm = uchi_lp(t, p, cutoff, opts, quad);
      const double scaled =
          std::pow(1.0 + t, 0.5 - (is_inf_p(p) ? 0.0 : 1.0 / p)) * norm;
      rep.uchi_rows.push_back({p, t, norm, scaled});
      vals.push_back(scaled);
    }
    assert_stabilized(vals, p, "a_p");
    rep.a_p.emplace_back(p, *std::max_element(vals.begin(), vals.end()));
  }
  for (double p : p_gradient) {
    std::vector<double> vals;
    for (double t : t_grid) {
      const double norm = grad_uchi_lp(t, p, cutoff, opts, quad);
      const double scaled =
          std::pow(1.0 + t, 1.0 - (is_inf_p(p) ? 0.0 : 1.0 / p)) * norm;
      rep.grad_rows.push_back({p, t, norm, scaled});
      vals.push_back(scaled);
    }
    assert_stabilized(vals, p, "b_p");
    rep.b_p.emplace_back(p, *std::max_element(vals.begin(), vals.end()));
  }
  rep.max_quad_rel_error = quad.max_rel;
  return rep;
}

EstimateReport verify_uchi_difference_bounds(
    const RadialCutoff& cutoff,
    const std::vector<std::pair<double, double>>& ts_pairs,
    const EstimateOptions& opts) {
  QuadAcc quad{opts.quad_rel_tol};
  EstimateReport rep;
  rep.ts_pairs = ts_pairs;

  for (const auto& [t, s] : ts_pairs) {
    if (t == s) continue;  // LHS = 0 exactly, ratio undefined
    const double far = std::max(
        cutoff.r_outer,
        kFarRadiusFactor * std::sqrt(1.0 + std::max(t, s)));
    const auto dvel = [&](double r) {
      const double dg =
          radial::uchi_g(r, t, cutoff) - radial::uchi_g(r, s, cutoff);
      return 2.0 * kPi * r * r * r * dg * dg;
    };
    const auto dgrad = [&](double r) {
      const double dg =
          radial::uchi_g(r, t, cutoff) - radial::uchi_g(r, s, cutoff);
      const double dgp = radial::uchi_g_prime(r, t, cutoff) -
                         radial::uchi_g_prime(r, s, cutoff);
      return 2.0 * kPi * r * radial::grad_sq_of_tangential(dg, dgp, r);
    };
    EstimateReport::DiffRow row;
    row.t = t;
    row.s = s;
    row.lhs_velocity = quad(dvel, cutoff.r_inner, cutoff.r_outer) +
                       quad(dvel, cutoff.r_outer, far);
    quad.note(row.lhs_velocity);
    row.lhs_gradient = quad(dgrad, cutoff.r_inner, cutoff.r_outer) +
                       quad(dgrad, cutoff.r_outer, far);
    quad.note(row.lhs_gradient);
    row.ratio_log =
        row.lhs_velocity / std::fabs(std::log((1.0 + t) / (1.0 + s)));
    row.ratio_inv =
        row.lhs_gradient / std::fabs(1.0 / (1.0 + t) - 1.0 / (1.0 + s));
    rep.diff_rows.push_back(row);
    rep.kappa1 = std::max(rep.kappa1, row.ratio_log);
    rep.kappa2 = std::max(rep.kappa2, row.ratio_inv);
  }
  if (rep.diff_rows.empty()) throw Error("no pairs with t != s");
  rep.max_quad_rel_error = quad.max_rel;
  return rep;
}

EstimateReport verify_remainder_bounds(const RadialCutoff& cutoff,
                                       const std::vector<double>& t_grid,
                                       int n_random_fields, std::uint64_t seed,
                                       const EstimateOptions& opts) {
  if (n_random_fields < 50)
    throw Error("verify_remainder_bounds needs >= 50 random fields");
  QuadAcc quad{opts.quad_rel_tol};
  EstimateReport rep;
  rep.t_grid = t_grid;
  rep.seed = seed;

  for (double t : t_grid)
    for (double p : {1.0, 2.0, kInfP}) {
      const double norm = rchi_lp(t, p, cutoff, opts, quad);
      const double scaled = (1.0 + t) * norm;
      rep.rchi_rows.push_back({is_inf_p(p) ? kInfP : p, t, norm, scaled});
      rep.kappa3 = std::max(rep.kappa3, scaled);
    }

  // Pairing test on the annulus D: Gauss-Legendre in r, trapezoid in theta.
  std::vector<double> gx, gw;
  gauss_legendre(opts.annulus_radial_nodes, gx, gw);
  const int nth = opts.annulus_theta_nodes;
  const double dth = 2.0 * kPi / nth;
  const double rm = 0.5 * (cutoff.r_inner + cutoff.r_outer);
  const double rh = 0.5 * (cutoff.r_outer - cutoff.r_inner);

  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < n_random_fields; ++sample) {
    const TrigField fld = draw_field(rng);
    for (double t : t_grid) {
      double pairing = 0.0, grad2 = 0.0;
      for (std::size_t i = 0; i < gx.size(); ++i) {
        const double r = rm + rh * gx[i];
        const double wr = rh * gw[i] * r * dth;
        const double rq = r * radial::remainder_q(r, t, cutoff);
        for (int j = 0; j < nth; ++j) {
          const double th = j * dth;
          const double cx = std::cos(th), sx = std::sin(th);
          double u[2], grad[4];
          fld.eval(r * cx, r * sx, u, grad);
          // R^chi = r Q(r) e_theta with e_theta = (-sin, cos).
          pairing += wr * rq * (-sx * u[0] + cx * u[1]);
          grad2 += wr * (grad[0] * grad[0] + grad[1] * grad[1] +
                         grad[2] * grad[2] + grad[3] * grad[3]);
        }
      }
      const double gn = std::sqrt(grad2);
      if (!(gn > 0.0) || !std::isfinite(pairing))
        throw InequalityViolated("degenerate pairing at sample " +
                                 std::to_string(sample));
      const double ratio = std::fabs(pairing) * (1.0 + t) / gn;
      rep.pair_rows.push_back({sample, t, pairing, gn, ratio});
      rep.kappa3_pairing = std::max(rep.kappa3_pairing, ratio);
    }
  }
  rep.max_quad_rel_error = quad.max_rel;
  return rep;
}

EstimateReport merge(const std::vector<EstimateReport>& parts) {
  EstimateReport out;
  for (const auto& p : parts) {
    auto cat = [](auto& dst, const auto& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    };
    cat(out.a_p, p.a_p);
    cat(out.b_p, p.b_p);
    cat(out.uchi_rows, p.uchi_rows);
    cat(out.grad_rows, p.grad_rows);
    cat(out.rchi_rows, p.rchi_rows);
    cat(out.diff_rows, p.diff_rows);
    cat(out.pair_rows, p.pair_rows);
    if (!p.t_grid.empty()) out.t_grid = p.t_grid;
    if (!p.ts_pairs.empty()) out.ts_pairs = p.ts_pairs;
    if (!p.p_list_velocity.empty()) out.p_list_velocity = p.p_list_velocity;
    if (!p.p_list_gradient.empty()) out.p_list_gradient = p.p_list_gradient;
    if (p.seed) out.seed = p.seed;
    out.kappa1 = std::max(out.kappa1, p.kappa1);
    out.kappa2 = std::max(out.kappa2, p.kappa2);
    out.kappa3 = std::max(out.kappa3, p.kappa3);
    out.kappa3_pairing = std::max(out.kappa3_pairing, p.kappa3_pairing);
    out.max_quad_rel_error = std::max(out.max_quad_rel_error,
                                      p.max_quad_rel_error);
  }
  return out;
}

void write_report(const EstimateReport& rep, const std::string& dir,
                  const std::string& header_comment) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir);

  auto open = [&](const std::string& name) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw IoError("cannot write " + name + " in " + dir);
    if (!header_comment.empty()) f << "# " << header_comment << "\n";
    return f;
  };

  {
    auto f = open("report.txt");
    f << "schema_version=1\n";
    for (const auto& [p, v] : rep.a_p)
      f << "a_p[" << fmt_p(p) << "]=" << fmt(v) << "\n";
    for (const auto& [p, v] : rep.b_p)
      f << "b_p[" << fmt_p(p) << "]=" << fmt(v) << "\n";
    f << "kappa1=" << fmt(rep.kappa1) << "\n";
    f << "kappa2=" << fmt(rep.kappa2) << "\n";
    f << "kappa3=" << fmt(rep.kappa3) << "\n";
    f << "kappa3_pairing=" << fmt(rep.kappa3_pairing) << "\n";
    f << "seed=" << rep.seed << "\n";
    f << "max_quad_rel_error=" << fmt(rep.max_quad_rel_error) << "\n";
  }
  auto norms_csv = [&](const std::string& name,
                       const std::vector<EstimateReport::NormRow>& rows) {
    if (rows.empty()) return;
    auto f = open(name);
    f << "p,t,value,normalized\n";
    for (const auto& r : rows)
      f << fmt_p(r.p) << ',' << fmt(r.t) << ',' << fmt(r.value) << ','
        << fmt(r.normalized) << "\n";
  };
  norms_csv("uchi_norms.csv", rep.uchi_rows);
  norms_csv("uchi_gradients.csv", rep.grad_rows);
  norms_csv("rchi_norms.csv", rep.rchi_rows);
  if (!rep.diff_rows.empty()) {
    auto f = open("uchi_differences.csv");
    f << "t,s,lhs_velocity,lhs_gradient,ratio_log,ratio_inv\n";
    for (const auto& r : rep.diff_rows)
      f << fmt(r.t) << ',' << fmt(r.s) << ',' << fmt(r.lhs_velocity) << ','
        << fmt(r.lhs_gradient) << ',' << fmt(r.ratio_log) << ','
        << fmt(r.ratio_inv) << "\n";
  }
  if (!rep.pair_rows.empty()) {
    auto f = open("rchi_pairings.csv");
    f << "sample,t,pairing,grad_norm_annulus,ratio\n";
    for (const auto& r : rep.pair_rows)
      f << r.sample << ',' << fmt(r.t) << ',' << fmt(r.pairing) << ','
        << fmt(r.grad_norm_annulus) << ',' << fmt(r.ratio) << "\n";
  }
}

std::pair<Trajectory, DecayFits> decay_experiment(double q, double alpha,
                                                  const InitSpec& init,
                                                  const SolverConfig& cfg,
                                                  double diag_interval,
                                                  double t_fit_min) {
  if (!(q > 1.0 && q < 2.0)) throw Error("decay_experiment needs q in (1,2)");
  const double mu = 1.0 / q - 0.5;

  const auto data = make_initial_data(init, cfg.grid, cfg.cutoff, alpha);
  RunOptions opts;
  opts.diag_interval = diag_interval;
  const Trajectory traj = run(cfg, data, opts);

  std::vector<std::pair<double, double>> s_v, s_dist, s_vort;
  for (const auto& r : traj.records) {
    if (!(r.t > 0.0)) continue;
    const double tm = std::pow(r.t, mu);
    s_v.emplace_back(r.t, tm * r.l2_v);
    s_dist.emplace_back(r.t, tm * r.l2_dist_oseen);
    s_vort.emplace_back(r.t, r.l1_vort_dist);
  }
  const std::pair<double, double> window{t_fit_min, cfg.t_end};
  DecayFits fits;
  fits.t_mu_l2_v = fit_power_law(s_v, window, RateFit::Model::kPower);
  fits.t_mu_l2_dist = fit_power_law(s_dist, window, RateFit::Model::kPower);
  fits.l1_vort_powerlog =
      fit_power_law(s_vort, window, RateFit::Model::kPowerLog);
  return {traj, fits};
}

}  // namespace vortexlab
