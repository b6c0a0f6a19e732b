#ifndef VORTEXLAB_ESTIMATES_HPP
#define VORTEXLAB_ESTIMATES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vortexlab/presets.hpp"
#include "vortexlab/records.hpp"
#include "vortexlab/solver.hpp"

namespace vortexlab {

/// Fitted constants for the truncated-vortex norm bounds, with the sampling
/// grids that produced them. All quadratures are 1D radial (the fields are
/// tangential with radial magnitude), deterministic, and reproducible
/// bit-for-bit for fixed grids.
struct EstimateReport {
  struct NormRow {
    double p, t, value, normalized;
  };
  struct DiffRow {
    double t, s, lhs_velocity, lhs_gradient, ratio_log, ratio_inv;
  };
  struct PairRow {
    int sample;
    double t, pairing, grad_norm_annulus, ratio;
  };

  std::vector<std::pair<double, double>> a_p;  // (p, sup_t normalized norm)
  std::vector<std::pair<double, double>> b_p;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double kappa3_pairing = 0.0;  // max pairing ratio over random fields

  std::vector<double> t_grid;
  std::vector<std::pair<double, double>> ts_pairs;
  std::vector<double> p_list_velocity;
  std::vector<double> p_list_gradient;
  std::uint64_t seed = 0;
  double max_quad_rel_error = 0.0;

  std::vector<NormRow> uchi_rows;
  std::vector<NormRow> grad_rows;
  std::vector<NormRow> rchi_rows;
  std::vector<DiffRow> diff_rows;
  std::vector<PairRow> pair_rows;
};

/// Quadrature/scan resolution knobs; the defaults converge well past the
/// report's stability tolerance.
struct EstimateOptions {
  double quad_rel_tol = 1e-11;
  int sup_scan_points = 4000;
  int annulus_radial_nodes = 64;
  int annulus_theta_nodes = 256;
};

inline constexpr double kInfP = 1e308;  // stands in for p = infinity

std::vector<double> default_t_grid();                     // 3+ decades
std::vector<std::pair<double, double>> default_ts_pairs();

/// (uchi1)/(uchi2): a_hat_p = sup_t (1+t)^(1/2-1/p) ||u^chi(.,t)||_p and
/// b_hat_p = sup_t (1+t)^(1-1/p) ||grad u^chi(.,t)||_p.
EstimateReport verify_uchi_norm_bounds(
    const RadialCutoff& cutoff, const std::vector<double>& t_grid,
    const std::vector<double>& p_velocity = {3.0, 4.0, 8.0, kInfP},
    const std::vector<double>& p_gradient = {1.5, 2.0, 4.0, kInfP},
    const EstimateOptions& opts = {});

/// (uchi3)/(uchi4): kappa1 = sup ||u^chi(t)-u^chi(s)||^2 / |log((1+t)/(1+s))|
/// and kappa2 with the |1/(1+t) - 1/(1+s)| normalization.
EstimateReport verify_uchi_difference_bounds(
    const RadialCutoff& cutoff,
    const std::vector<std::pair<double, double>>& ts_pairs,
    const EstimateOptions& opts = {});

/// (Rchi1)/(Rchi2): kappa3 = sup over t and p in {1,2,inf} of
/// (1+t)||R^chi||_p, then the pairing inequality against seeded
/// band-limited fields on the annulus.
EstimateReport verify_remainder_bounds(const RadialCutoff& cutoff,
                                       const std::vector<double>& t_grid,
                                       int n_random_fields, std::uint64_t seed,
                                       const EstimateOptions& opts = {});

/// Merge partial reports (constants and tables) into one.
EstimateReport merge(const std::vector<EstimateReport>& parts);

/// Plain-text key-value serialization plus per-bound CSV tables.
void write_report(const EstimateReport& rep, const std::string& dir,
                  const std::string& header_comment);

struct DecayFits {
  RateFit t_mu_l2_v;        // power fit of t^mu ||v||_L2
  RateFit t_mu_l2_dist;     // power fit of t^mu ||u - alpha Theta||_L2
  RateFit l1_vort_powerlog; // power.log fit of ||omega - alpha Xi||_L1
};

/// Runs the solver with the given preset and fits the expected decay rates over
/// the late window [t_fit_min, t_end].
std::pair<Trajectory, DecayFits> decay_experiment(double q, double alpha,
                                                  const InitSpec& init,
                                                  const SolverConfig& cfg,
                                                  double diag_interval,
                                                  double t_fit_min);

}  // namespace vortexlab

#endif
