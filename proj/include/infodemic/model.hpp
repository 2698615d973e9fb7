#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace infodemic {

/**
 * @brief Rates and coupling coefficients of the awareness-epidemic model.
 *
 * alpha_1 scales the infection rate of aware individuals (partial immunization,
 * 0 = full protection, 1 = none); alpha_2 scales the awareness rate of infected
 * individuals (>= 1, infection promotes awareness). Effective rates are
 * beta_i_hat = alpha_1 * beta_i and beta_a_hat = alpha_2 * beta_a.
 */
struct ModelParams {
  double beta_i = 0.15;          // disease transmission rate, per day
  double alpha_1 = 0.5;          // aware infection-rate factor, in [0, 1]
  double alpha_2 = 1.0;          // infected awareness-rate factor, >= 1
  double beta_a = 0.15;          // awareness transmission rate, per day
  double gamma_i = 1.0 / 14.0;   // disease recovery rate, per day
  double gamma_a = 0.025;        // awareness inactivation rate, per day

  double beta_i_hat() const { return alpha_1 * beta_i; }
  double beta_a_hat() const { return alpha_2 * beta_a; }

  /// Throws std::invalid_argument when a field violates its range.
  void validate() const;
};

/// Reads/writes a ModelParams field by name (beta_i, alpha_1, alpha_2, beta_a,
/// gamma_i, gamma_a). Throws std::invalid_argument on unknown names.
void set_param(ModelParams& params, const std::string& name, double value);
double get_param(const ModelParams& params, const std::string& name);

/**
 * @brief Nine compartment fractions plus four cumulative transition-flow
 * accumulators, integrated together as one 13-dimensional ODE state.
 *
 * Compartments combine awareness status (unaware U, active-aware A1,
 * inactive-aware A2) with disease status (S, I, R). The flux accumulators
 * record time-integrated flows: flux_blue = aware-susceptible infections
 * (A1S/A2S -> I), flux_green = infected becoming aware (UI -> A1I),
 * flux_red = recovered becoming aware (UR -> A1R), flux_aware = total inflow
 * to A1 from any unaware compartment.
 */
struct CompartmentState {
  double us = 0, a1s = 0, a2s = 0;
  double ui = 0, a1i = 0, a2i = 0;
  double ur = 0, a1r = 0, a2r = 0;
  double flux_blue = 0, flux_green = 0, flux_red = 0, flux_aware = 0;

  static constexpr int kSize = 13;
  using Vector = Eigen::Matrix<double, kSize, 1>;

  Vector to_vector() const;
  static CompartmentState from_vector(const Vector& v);

  double aware_active() const { return a1s + a1i + a1r; }  // [A1]
  double infected() const { return ui + a1i + a2i; }       // I
  double recovered() const { return ur + a1r + a2r; }
  double compartment_sum() const {
    return us + a1s + a2s + ui + a1i + a2i + ur + a1r + a2r;
  }

  /// Throws std::invalid_argument on non-finite fields, fractions below -1e-9,
  /// or a compartment sum off 1 by more than 1e-9.
  void validate() const;
};

/// Baseline initial condition: ui and a1s seeded, us holds the remainder.
CompartmentState seeded_state(double ui0 = 1e-6, double a1s0 = 1e-6);

/**
 * @brief Instantaneous time derivative of the full 13-dimensional state.
 *
 * The nine compartment derivatives sum to zero analytically (closed
 * population); the four flux derivatives are the instantaneous transition
 * rates of their groups. Throws std::invalid_argument on non-finite input.
 */
CompartmentState::Vector derivatives(const CompartmentState& state, const ModelParams& params);

/// Vector-form RHS used by the integrator; no validation, pure arithmetic.
CompartmentState::Vector derivatives(const CompartmentState::Vector& y, const ModelParams& params);

/// Time-indexed trajectory sampled at t = 0, h, 2h, ..., n_steps*h.
struct Trajectory {
  double h = 0.5;                        // step size, days
  ModelParams params;                    // snapshot of the generating run
  std::vector<CompartmentState> states;  // length n_steps + 1

  std::size_t size() const { return states.size(); }
  double time(std::size_t i) const { return h * static_cast<double>(i); }
  const CompartmentState& front() const { return states.front(); }
  const CompartmentState& back() const { return states.back(); }
};

/**
 * @brief One classical fourth-order Runge-Kutta step.
 *
 * Preserves the sum-to-one invariant to machine precision per step because the
 * RHS sums to zero. Throws std::runtime_error if any compartment drops below
 * -1e-9 after the step (step size too large for the given rates).
 */
CompartmentState rk4_step(const CompartmentState& state, const ModelParams& params, double h);

/**
 * @brief Integrates the system with fixed-step RK4.
 *
 * Deterministic: identical inputs give bitwise-identical trajectories. Stored
 * states have round-off negatives in [-1e-9, 0) clamped to 0; the integration
 * itself proceeds on unclamped values. Step failures rethrow with the
 * offending step index.
 */
Trajectory integrate(const CompartmentState& initial, const ModelParams& params, double h,
                     std::size_t n_steps);

/// Returns (beta_i_hat, beta_a_hat) = (alpha_1*beta_i, alpha_2*beta_a).
std::pair<double, double> effective_rates(const ModelParams& params);

}  // namespace infodemic
