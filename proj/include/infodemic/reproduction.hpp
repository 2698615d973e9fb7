#pragma once

#include "infodemic/model.hpp"
#include "infodemic/timeseries.hpp"

#include <Eigen/Dense>

namespace infodemic {

/**
 * @brief Next-generation matrices at a disease-free evaluation point.
 *
 * Rows/columns order the infected compartments (ui, a1i, a2i). f_matrix holds
 * the new-infection rates, v_matrix the outflow/transfer rates; the basic
 * reproduction number is the spectral radius of f_matrix * v_matrix^-1.
 */
struct NgmPair {
  Eigen::Matrix3d f_matrix;
  Eigen::Matrix3d v_matrix;
};

/// Builds F and V from the parameters and the disease-free initial fractions
/// (us, a1s, a2s of `initial`).
NgmPair ngm_matrices(const ModelParams& params, const CompartmentState& initial);

/// Closed form (beta_i/gamma_i) * (us0 + alpha_1 * a1s0); exact spectral
/// radius whenever a2s0 = 0.
double r0_eff_closed_form(const ModelParams& params, const CompartmentState& initial);

/**
 * @brief Largest-magnitude eigenvalue of F V^-1 by power iteration
 * (relative tolerance 1e-14). Throws std::runtime_error on non-convergence.
 */
double spectral_r0(const NgmPair& ngm);

/// Expanded algebraic sum for the spectral radius, kept as an independent
/// cross-check of the matrix construction; equals
/// (beta_i/gamma_i) * (us0 + alpha_1*(a1s0 + a2s0)).
double r0_long_sum(const ModelParams& params, const CompartmentState& initial);

/// Per-sample effective reproduction number
/// (beta_i/gamma_i) * (us + alpha_1*(a1s + a2s)); time in days.
TimeSeries rt_eff_series(const Trajectory& traj, const ModelParams& params);

}  // namespace infodemic
