#pragma once

#include "infodemic/model.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace infodemic {

/// Inclusive box bounds for one free parameter.
struct FitBounds {
  double lo = 0;
  double hi = 1;
};

/**
 * @brief Everything a single-wave fit needs: which parameters are free, their
 * boxes, the fixed model parameters, and the target series of smoothed daily
 * incident fractions (one value per day, day 0 = wave start).
 *
 * The model run behind each candidate is seeded with initial infected
 * fraction target[0] and aware-susceptible seed a1s_seed, integrated for
 * target.size() + horizon_margin_days days. The amplitude scale s and the
 * day offset t0 are always fitted as nuisance parameters.
 */
struct FitSpec {
  std::vector<std::string> free = {"alpha_1", "beta_a"};
  std::map<std::string, FitBounds> bounds;
  ModelParams fixed;
  std::vector<double> target;
  double t0_max = 20;
  double a1s_seed = 1e-6;
  double h = 0.5;
  std::size_t horizon_margin_days = 40;
  std::size_t grid_points = 21;

  /// Box for a free parameter: the entry in `bounds` if present, otherwise
  /// alpha_1 in [0, 1] and beta_a in [0.01, 0.5].
  FitBounds bounds_for(const std::string& name) const;

  /// Throws std::invalid_argument when the free set is not a non-empty
  /// subset of {alpha_1, beta_a}, a box is empty or outside the parameter
  /// domain, the target is shorter than 10 days or starts at a value
  /// outside (0, 0.5), or the horizon margin cannot cover t0_max.
  void validate() const;
};

/// One-sided profile endpoints; censored means the profile was still inside
/// the acceptance region when it hit the box bound.
struct IntervalEstimate {
  double lo = 0;
  double hi = 0;
  bool lo_censored = false;
  bool hi_censored = false;
};

/// Fitted wave: point estimates (free parameters from the optimizer, the
/// rest copied from the spec), nuisance values, objective, and profile
/// intervals for every free parameter.
struct WaveFit {
  double alpha_1 = 0;
  double beta_a = 0;
  double scale = 1;
  double t0 = 0;
  double sse = 0;
  std::map<std::string, IntervalEstimate> intervals;
};

/**
 * @brief Two-stage least-squares fit of the model's daily incidence curve to
 * the target: a coarse grid over the free parameters (with the scale solved
 * in closed form and t0 swept over a coarse grid) seeds a Nelder-Mead
 * refinement over (free..., log scale, t0), restarted three times with
 * shrinking initial steps.
 *
 * Deterministic: no randomness anywhere, identical spec gives an identical
 * result. Candidates whose integration fails are discarded (logged once per
 * fit); if every grid candidate fails, throws std::runtime_error. Profile
 * intervals at the default 5% threshold are filled in for each free
 * parameter before returning.
 */
WaveFit fit_wave(const FitSpec& spec);

/**
 * @brief Smallest and largest values of one free parameter whose profile
 * objective (re-optimizing all other free and nuisance parameters) stays
 * within sse_min * (1 + threshold).
 *
 * Brackets each side by outward doubling from the fitted value, then
 * bisects the crossing; a side whose profile never exceeds the target
 * before the box bound is reported censored at that bound.
 */
IntervalEstimate profile_interval(const FitSpec& spec, const WaveFit& fit,
                                  const std::string& param, double threshold = 0.05);

/// Model daily incidence series used by the fit objective for the given free
/// parameter values: seeded from target[0], length target.size() +
/// horizon_margin_days + 1 days.
std::vector<double> fit_model_series(const FitSpec& spec, double alpha_1, double beta_a);

/// Fitted curve on the target's day grid: scale * model(day - t0), for
/// plotting model-vs-data overlays.
std::vector<double> fit_prediction(const FitSpec& spec, const WaveFit& fit);

/// Per-wave fitted parameters inside a table row; NaN marks a missing wave.
struct WaveParams {
  double alpha_1 = std::numeric_limits<double>::quiet_NaN();
  double beta_a = std::numeric_limits<double>::quiet_NaN();
};

/// One region's row: up to three waves, an optional activity ranking, the
/// wave-1 minus wave-2 deltas, and any extra named indices.
struct ParamTableRow {
  std::string region;
  std::array<WaveParams, 3> waves;
  double ranking = std::numeric_limits<double>::quiet_NaN();
  double d_alpha_1 = std::numeric_limits<double>::quiet_NaN();
  double d_beta_a = std::numeric_limits<double>::quiet_NaN();
  std::map<std::string, double> extra;
};

struct ParamTable {
  std::vector<ParamTableRow> rows;
  std::vector<std::string> extra_columns;
};

/**
 * @brief Assembles the cross-region parameter table from per-region,
 * per-wave fits plus optional ranking and extra index columns.
 *
 * Wave labels are p1, p2, p3; missing waves leave NaN markers and suppress
 * the delta columns for that row. Deltas use the wave-1 minus wave-2
 * convention. Rows come out sorted by region label.
 */
ParamTable build_param_table(
    const std::map<std::string, std::map<std::string, WaveFit>>& fits,
    const std::map<std::string, double>& rankings = {},
    const std::map<std::string, std::map<std::string, double>>& extra_indices = {});

/// Reads a parameter table CSV (header: region, alpha1_p1, beta_a_p1, ...,
/// alpha1_p3, beta_a_p3, ranking[, extras...]; empty fields = missing) and
/// recomputes the delta columns.
ParamTable read_param_table_csv(const std::string& path);

/// One row of the correlation report; a non-empty `error` explains why the
/// pair produced no estimate (too few complete rows, zero variance).
struct CorrelationEntry {
  std::string pair;
  double rho = std::numeric_limits<double>::quiet_NaN();
  double p_value = std::numeric_limits<double>::quiet_NaN();
  std::size_t n = 0;
  std::string error;
};

/**
 * @brief Pearson correlation with significance for each requested column
 * pair of the table, dropping rows with a missing value pairwise.
 *
 * Column names: region-row fields alpha1_p1 ... beta_a_p3, ranking,
 * d_alpha_1, d_beta_a, plus any extra column; d_alpha_a is accepted as an
 * alias for d_alpha_1 (the awareness-delta naming is ambiguous upstream).
 */
std::vector<CorrelationEntry> correlate_table(
    const ParamTable& table,
    const std::vector<std::pair<std::string, std::string>>& pairs);

namespace detail {

/// Result of a simplex minimization.
struct NmResult {
  Eigen::VectorXd x;
  double value = 0;
};

/**
 * @brief Nelder-Mead minimization (reflection 1, expansion 2, contraction
 * 0.5, shrink 0.5) from a starting point with per-coordinate initial steps.
 *
 * Stops when the simplex's value spread falls below f_tol relative to the
 * best value, or after max_iterations. The objective may return +infinity
 * to reject a point.
 */
NmResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                     const Eigen::VectorXd& x0, const Eigen::VectorXd& steps,
                     int max_iterations = 300, double f_tol = 1e-13);

/// One side of a profile interval.
struct ProfileSide {
  double endpoint = 0;
  bool censored = false;
};

/**
 * @brief Finds where a 1-D profile objective crosses `target`, scanning from
 * `center` toward `bound` with a doubling step then bisecting the bracket.
 *
 * `profile_value` must be deterministic for the bisection to converge; it is
 * evaluated at most ~log2(range/initial_step) + bisect_iterations times per
 * call. If the profile stays at or below target all the way to the bound,
 * the side is censored at the bound.
 */
ProfileSide solve_profile_crossing(const std::function<double(double)>& profile_value,
                                   double center, double bound, double target,
                                   double initial_step, int bisect_iterations = 9);

/// Linear interpolation of a daily series at day - t0, zero outside the
/// series' index range; the fit's time-offset shift.
std::vector<double> shift_series(const std::vector<double>& series, double t0,
                                 std::size_t out_len);

/// Closed-form least-squares amplitude for target ~ s * model, floored at
/// 1e-300 so log(s) stays finite; returns 0 when the model is identically 0.
double least_squares_scale(const std::vector<double>& model, const std::vector<double>& target);

}  // namespace detail

}  // namespace infodemic
