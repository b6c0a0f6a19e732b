#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vortexlab/config.hpp"
#include "vortexlab/csv.hpp"
#include "vortexlab/diagnostics.hpp"
#include "vortexlab/estimates.hpp"
#include "vortexlab/norms.hpp"
#include "vortexlab/presets.hpp"
#include "vortexlab/snapshot.hpp"
#include "vortexlab/solver.hpp"

namespace fs = std::filesystem;
using namespace vortexlab;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SolverConfig to_solver_config(const ExperimentConfig& c) {
  SolverConfig sc;
  sc.grid = Grid(c.grid.n, c.grid.half_width);
  sc.dt = c.time.dt;
  sc.t_end = c.time.t_end;
  sc.params.alpha = c.vortex.alpha;
  sc.cutoff = RadialCutoff{c.vortex.r_inner, c.vortex.r_outer};
  if (c.penalization.enabled) {
    const double r2 =
        c.penalization.obstacle_radius * c.penalization.obstacle_radius;
    Penalization pen;
    pen.mask = sample(
        [r2](Vec2 x) { return x.x * x.x + x.y * x.y <= r2 ? 1.0 : 0.0; },
        sc.grid);
    pen.epsilon = c.penalization.epsilon;
    sc.penalization = pen;
  }
  return sc;
}

InitSpec to_init_spec(const ExperimentConfig& c) {
  return {c.init.preset, c.init.amplitude, c.init.file_path};
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir);
}

void write_summary(const std::string& path,
                   const std::vector<std::string>& config_lines,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << "# schema_version=1\n";
  for (const auto& line : config_lines) f << "# " << line << "\n";
  for (const auto& [k, v] : kv) f << k << '=' << v << "\n";
}

/// Writes omega = zeta + alpha omega^chi snapshots at the requested times.
class SnapshotWriter {
 public:
  SnapshotWriter(const ExperimentConfig& cfg, const SolverConfig& sc,
                 double alpha)
      : times_(cfg.output.snapshot_times),
        dir_(cfg.output.dir),
        cutoff_(sc.cutoff),
        alpha_(alpha),
        eps_(0.5 * sc.dt) {
    std::sort(times_.begin(), times_.end());
  }

  void operator()(const SolverState& s) {
    while (next_ < times_.size() && s.t >= times_[next_] - eps_) {
      ScalarField omega = s.zeta;
      if (alpha_ != 0.0) {
        const double t = s.t;
        const ScalarField bg = sample(
            [&](Vec2 x) { return truncated_vorticity({x, t}, cutoff_); },
            omega.grid());
        axpy(alpha_, bg, omega);
      }
      char name[64];
      std::snprintf(name, sizeof name, "snapshot_t%g.bin", times_[next_]);
      write_snapshot((fs::path(dir_) / name).string(), omega, s.t);
      ++next_;
    }
  }

 private:
  std::vector<double> times_;
  std::string dir_;
  RadialCutoff cutoff_;
  double alpha_;
  double eps_;
  std::size_t next_ = 0;
};

int cmd_run(const ExperimentConfig& cfg) {
  const SolverConfig sc = to_solver_config(cfg);
  const auto init = make_initial_data(to_init_spec(cfg), sc.grid, sc.cutoff,
                                      cfg.vortex.alpha);
  ensure_dir(cfg.output.dir);

  SnapshotWriter snaps(cfg, sc, init.first);
  SolverState last{0.0, init.second};
  RunOptions opts;
  opts.diag_interval = cfg.time.diag_interval;
  opts.observer = [&](const SolverState& s) {
    snaps(s);
    last = s;
  };
  const Trajectory traj = run(sc, init, opts);

  const auto config_lines = serialize_config(cfg);
  write_trajectory_csv(traj,
                       (fs::path(cfg.output.dir) / "trajectory.csv").string(),
                       config_lines);

  std::vector<std::pair<std::string, std::string>> kv;
  const auto& fin = traj.records.back();
  kv.emplace_back("alpha", fmt(init.first));
  kv.emplace_back("final_t", fmt(fin.t));
  kv.emplace_back("final_l2_v", fmt(fin.l2_v));
  kv.emplace_back("final_l2_dist_oseen", fmt(fin.l2_dist_oseen));
  kv.emplace_back("final_l1_vort_dist", fmt(fin.l1_vort_dist));
  kv.emplace_back("final_circulation", fmt(fin.circulation));
  if (init.first != 0.0) {
    // Relative L2 error of the recomposed vorticity against alpha Xi.
    const double alpha = init.first;
    const double t = last.t;
    ScalarField diff = last.zeta;
    ScalarField xi(sc.grid);
    for (int iy = 0; iy < sc.grid.n; ++iy)
      for (int ix = 0; ix < sc.grid.n; ++ix) {
        const Vec2 x = sc.grid.node(ix, iy);
        const double xiv = oseen_vorticity({x, t});
        xi.at(ix, iy) = alpha * xiv;
        diff.at(ix, iy) +=
            alpha * (truncated_vorticity({x, t}, sc.cutoff) - xiv);
      }
    kv.emplace_back("final_oseen_rel_l2",
                    fmt(lp_norm(diff, 2.0) / lp_norm(xi, 2.0)));
  }
  write_summary((fs::path(cfg.output.dir) / "summary.txt").string(),
                config_lines, kv);
  std::cout << "wrote " << cfg.output.dir << "/trajectory.csv ("
            << traj.records.size() << " records)\n";
  return 0;
}

int cmd_verify_lemmas(const ExperimentConfig& cfg, int jobs) {
  const RadialCutoff cutoff{cfg.vortex.r_inner, cfg.vortex.r_outer};
  const auto t_grid = default_t_grid();
  const auto pairs = default_ts_pairs();
  const std::uint64_t seed = cfg.study.seed;

  EstimateReport norms, diffs, rems;
  if (jobs > 1) {
    auto f1 = std::async(std::launch::async, [&] {
      return verify_uchi_norm_bounds(cutoff, t_grid);
    });
    auto f2 = std::async(std::launch::async, [&] {
      return verify_uchi_difference_bounds(cutoff, pairs);
    });
    auto f3 = std::async(std::launch::async, [&] {
      return verify_remainder_bounds(cutoff, t_grid, 100, seed);
    });
    norms = f1.get();
    diffs = f2.get();
    rems = f3.get();
  } else {
    norms = verify_uchi_norm_bounds(cutoff, t_grid);
    diffs = verify_uchi_difference_bounds(cutoff, pairs);
    rems = verify_remainder_bounds(cutoff, t_grid, 100, seed);
  }
  const EstimateReport rep = merge({norms, diffs, rems});

  std::string header;
  for (const auto& line : serialize_config(cfg)) {
    if (!header.empty()) header += "; ";
    header += line;
  }
  write_report(rep, cfg.output.dir, header);
  std::cout << "kappa1=" << fmt(rep.kappa1) << " kappa2=" << fmt(rep.kappa2)
            << " kappa3=" << fmt(rep.kappa3)
            << " kappa3_pairing=" << fmt(rep.kappa3_pairing) << "\n"
            << "wrote " << cfg.output.dir << "/report.txt\n";
  return 0;
}

int cmd_decay_study(const ExperimentConfig& cfg) {
  const SolverConfig sc = to_solver_config(cfg);
  const double t_fit_min = std::max(10.0, 0.05 * cfg.time.t_end);
  const auto [traj, fits] =
      decay_experiment(cfg.study.q, cfg.vortex.alpha, to_init_spec(cfg), sc,
                       cfg.time.diag_interval, t_fit_min);

  ensure_dir(cfg.output.dir);
  const auto config_lines = serialize_config(cfg);
  write_trajectory_csv(traj,
                       (fs::path(cfg.output.dir) / "trajectory.csv").string(),
                       config_lines);

  const double mu = 1.0 / cfg.study.q - 0.5;
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("q", fmt(cfg.study.q));
  kv.emplace_back("mu", fmt(mu));
  kv.emplace_back("t_fit_min", fmt(t_fit_min));
  auto put = [&](const std::string& name, const RateFit& f) {
    kv.emplace_back(name + ".exponent", fmt(f.exponent));
    kv.emplace_back(name + ".amplitude", fmt(f.amplitude));
    kv.emplace_back(name + ".residual", fmt(f.residual));
  };
  put("fit_t_mu_l2_v", fits.t_mu_l2_v);
  put("fit_t_mu_l2_dist", fits.t_mu_l2_dist);
  put("fit_l1_vort_powerlog", fits.l1_vort_powerlog);
  write_summary((fs::path(cfg.output.dir) / "decay_summary.txt").string(),
                config_lines, kv);
  std::cout << "t^mu l2_v slope=" << fmt(fits.t_mu_l2_v.exponent)
            << " l1_vort powerlog exponent="
            << fmt(fits.l1_vort_powerlog.exponent) << "\n"
            << "wrote " << cfg.output.dir << "/decay_summary.txt\n";
  return 0;
}

int cmd_report(const std::string& csv_path, double t_min, double t_max,
               double mu) {
  const Trajectory traj = read_trajectory_csv(csv_path);
  if (traj.records.empty()) throw InsufficientData("empty trajectory CSV");
  if (t_max <= 0.0) t_max = traj.records.back().t;
  if (t_min <= 0.0) t_min = std::max(1.0 + 1e-9, 0.05 * t_max);

  auto series = [&](auto pick, double scale_mu) {
    std::vector<std::pair<double, double>> s;
    for (const auto& r : traj.records)
      if (r.t > 0.0) s.emplace_back(r.t, std::pow(r.t, scale_mu) * pick(r));
    return s;
  };
  const std::pair<double, double> window{t_min, t_max};
  auto print = [&](const std::string& name, const RateFit& f) {
    std::cout << name << ".exponent=" << fmt(f.exponent) << "\n"
              << name << ".amplitude=" << fmt(f.amplitude) << "\n"
              << name << ".residual=" << fmt(f.residual) << "\n";
  };
  std::cout << "window=[" << fmt(t_min) << "," << fmt(t_max) << "] mu="
            << fmt(mu) << "\n";
  print("fit_t_mu_l2_v",
        fit_power_law(series([](const DiagnosticRecord& r) { return r.l2_v; },
                             mu),
                      window));
  print("fit_t_mu_l2_dist",
        fit_power_law(
            series([](const DiagnosticRecord& r) { return r.l2_dist_oseen; },
                   mu),
            window));
  print("fit_l1_vort_powerlog",
        fit_power_law(
            series([](const DiagnosticRecord& r) { return r.l1_vort_dist; },
                   0.0),
            window, RateFit::Model::kPowerLog));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vortexlab experiment runner"};
  app.require_subcommand(1);

  std::string config_path, csv_path;
  int jobs = 1;
  double t_min = 0.0, t_max = 0.0, mu = 0.25;

  auto* run_cmd = app.add_subcommand("run", "integrate one configuration");
  run_cmd->add_option("--config", config_path, "config file")->required();

  auto* verify_cmd =
      app.add_subcommand("verify-lemmas", "radial-quadrature bound fits");
  verify_cmd->add_option("--config", config_path, "config file")->required();
  verify_cmd->add_option("--jobs", jobs, "parallel verification passes");

  auto* decay_cmd =
      app.add_subcommand("decay-study", "run and fit decay rates");
  decay_cmd->add_option("--config", config_path, "config file")->required();

  auto* report_cmd =
      app.add_subcommand("report", "fit rates from an existing trajectory");
  report_cmd->add_option("--input", csv_path, "trajectory CSV")->required();
  report_cmd->add_option("--t-min", t_min, "fit window start");
  report_cmd->add_option("--t-max", t_max, "fit window end");
  report_cmd->add_option("--mu", mu, "time weight exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = parse_config(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*run_cmd) return cmd_run(cfg);
    if (*verify_cmd) return cmd_verify_lemmas(cfg, jobs);
    if (*decay_cmd) return cmd_decay_study(cfg);
    if (*report_cmd) return cmd_report(csv_path, t_min, t_max, mu);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
