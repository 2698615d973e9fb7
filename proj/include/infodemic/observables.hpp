#pragma once

#include "infodemic/model.hpp"
#include "infodemic/timeseries.hpp"

namespace infodemic {

/// Scalar summary of one run: final size R*, peak prevalence I_m, peak time t_m.
struct Observables {
  double r_star = 0;  // fraction ever infected at the end of the run
  double i_m = 0;     // maximum of I(t) = ui + a1i + a2i
  double t_m = 0;     // time of the first maximum, days
};

/**
 * @brief Split of the ever-infected population by the path on which each
 * individual's awareness transition happened.
 *
 * r3_blue: infected while aware (A1S/A2S -> I); r2_green: became aware while
 * infected (UI -> A1I); r1_red: became aware after recovery (UR -> A1R);
 * residual_ur: recovered and never aware. The four parts sum to R*.
 */
struct EquilibriumDecomposition {
  double r1_red = 0;
  double r2_green = 0;
  double r3_blue = 0;
  double residual_ur = 0;

  double total() const { return r1_red + r2_green + r3_blue + residual_ur; }
};

/// Fraction ever infected (ur + a1r + a2r) at the final sample.
double final_size(const Trajectory& traj);

/// Peak of I(t) over the samples and its time; ties resolve to the first
/// attaining index.
std::pair<double, double> peak_prevalence(const Trajectory& traj);

/// Bundles final_size and peak_prevalence.
Observables observables(const Trajectory& traj);

/// True iff total infection prevalence at the final sample is below threshold.
bool check_absorbed(const Trajectory& traj, double threshold = 1e-10);

/// Pathway decomposition read at the horizon, absorbed or not (callers decide
/// how to flag unconverged runs).
EquilibriumDecomposition decomposition_at_horizon(const Trajectory& traj);

/// Checked variant: throws std::runtime_error when the trajectory has not
/// absorbed (prevalence >= threshold at the horizon).
EquilibriumDecomposition decompose_equilibrium(const Trajectory& traj,
                                               double absorb_threshold = 1e-10);

/**
 * @brief Daily new-infection series aggregated from the per-sample incidence
 * rate beta_i*I*us + beta_i_hat*I*(a1s + a2s).
 *
 * Day d sums h-weighted rate samples with floor(t) = d, so the series totals
 * the time integral of incidence over the horizon (left-Riemann).
 */
TimeSeries incidence_series(const Trajectory& traj);

/**
 * @brief Daily new-awareness series from flux_aware differences taken at
 * first-sample-of-day boundaries; sums exactly to the final flux_aware.
 */
TimeSeries awareness_incidence_series(const Trajectory& traj);

}  // namespace infodemic
