#include "infodemic/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace infodemic {

namespace {

bool all_finite(const CompartmentState::Vector& v) { return v.allFinite(); }

void throw_invalid(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

void ModelParams::validate() const {
  if (!(std::isfinite(beta_i) && std::isfinite(alpha_1) && std::isfinite(alpha_2) &&
        std::isfinite(beta_a) && std::isfinite(gamma_i) && std::isfinite(gamma_a)))
    throw_invalid("model params: non-finite value");
  if (beta_i < 0) throw_invalid("model params: beta_i must be >= 0");
  if (beta_a < 0) throw_invalid("model params: beta_a must be >= 0");
  if (gamma_i <= 0) throw_invalid("model params: gamma_i must be > 0");
  if (gamma_a <= 0) throw_invalid("model params: gamma_a must be > 0");
  if (alpha_1 < 0 || alpha_1 > 1) throw_invalid("model params: alpha_1 must lie in [0, 1]");
  if (alpha_2 < 1) throw_invalid("model params: alpha_2 must be >= 1");
}

void set_param(ModelParams& params, const std::string& name, double value) {
  if (name == "beta_i") params.beta_i = value;
  else if (name == "alpha_1") params.alpha_1 = value;
  else if (name == "alpha_2") params.alpha_2 = value;
  else if (name == "beta_a") params.beta_a = value;
  else if (name == "gamma_i") params.gamma_i = value;
  else if (name == "gamma_a") params.gamma_a = value;
  else throw_invalid("unknown model parameter: " + name);
}

double get_param(const ModelParams& params, const std::string& name) {
  if (name == "beta_i") return params.beta_i;
  if (name == "alpha_1") return params.alpha_1;
  if (name == "alpha_2") return params.alpha_2;
  if (name == "beta_a") return params.beta_a;
  if (name == "gamma_i") return params.gamma_i;
  if (name == "gamma_a") return params.gamma_a;
  throw_invalid("unknown model parameter: " + name);
  return 0;  // unreachable
}

CompartmentState::Vector CompartmentState::to_vector() const {
  Vector v;
  v << us, a1s, a2s, ui, a1i, a2i, ur, a1r, a2r, flux_blue, flux_green, flux_red, flux_aware;
  return v;
}

CompartmentState CompartmentState::from_vector(const Vector& v) {
  CompartmentState s;
  s.us = v[0]; s.a1s = v[1]; s.a2s = v[2];
  s.ui = v[3]; s.a1i = v[4]; s.a2i = v[5];
  s.ur = v[6]; s.a1r = v[7]; s.a2r = v[8];
  s.flux_blue = v[9]; s.flux_green = v[10]; s.flux_red = v[11]; s.flux_aware = v[12];
  return s;
}

void CompartmentState::validate() const {
  const Vector v = to_vector();
  if (!all_finite(v)) throw_invalid("compartment state: non-finite value");
  for (int i = 0; i < kSize; ++i)
    if (v[i] < -1e-9) throw_invalid("compartment state: negative fraction at index " + std::to_string(i));
  if (std::abs(compartment_sum() - 1.0) > 1e-9)
    throw_invalid("compartment state: compartments do not sum to 1");
}

CompartmentState seeded_state(double ui0, double a1s0) {
  CompartmentState s;
  s.ui = ui0;
  s.a1s = a1s0;
  s.us = 1.0 - ui0 - a1s0;
  return s;
}

CompartmentState::Vector derivatives(const CompartmentState::Vector& y, const ModelParams& p) {
  const double us = y[0], a1s = y[1], a2s = y[2];
  const double ui = y[3], a1i = y[4], a2i = y[5];
  const double ur = y[6], a1r = y[7];

  const double a1 = a1s + a1i + a1r;       // [A1], active aware
  const double infected = ui + a1i + a2i;  // I
  const double bi = p.beta_i;
  const double ba = p.beta_a;
  const double bi_hat = p.beta_i_hat();
  const double ba_hat = p.beta_a_hat();

  CompartmentState::Vector d;
  d[0] = -ba * a1 * us - bi * infected * us;
  d[1] = ba * a1 * us - bi_hat * infected * a1s - p.gamma_a * a1s;
  d[2] = p.gamma_a * a1s - bi_hat * infected * a2s;
  d[3] = bi * infected * us - ba_hat * a1 * ui - p.gamma_i * ui;
  d[4] = ba_hat * a1 * ui + bi_hat * infected * a1s - p.gamma_a * a1i - p.gamma_i * a1i;
  d[5] = p.gamma_a * a1i + bi_hat * infected * a2s - p.gamma_i * a2i;
  d[6] = -ba * a1 * ur + p.gamma_i * ui;
  d[7] = ba * a1 * ur + p.gamma_i * a1i - p.gamma_a * a1r;
  d[8] = p.gamma_a * a1r + p.gamma_i * a2i;
  d[9] = bi_hat * infected * (a1s + a2s);             // flux_blue: AS -> AI
  d[10] = ba_hat * a1 * ui;                           // flux_green: UI -> A1I
  d[11] = ba * a1 * ur;                               // flux_red: UR -> A1R
  d[12] = ba * a1 * (us + ur) + ba_hat * a1 * ui;     // flux_aware: U* -> A1*
  return d;
}

CompartmentState::Vector derivatives(const CompartmentState& state, const ModelParams& params) {
  params.validate();
  const CompartmentState::Vector y = state.to_vector();
  if (!all_finite(y)) throw_invalid("derivatives: non-finite state");
  return derivatives(y, params);
}

namespace {

CompartmentState::Vector rk4_advance(const CompartmentState::Vector& y, const ModelParams& p,
                                     double h) {
  const CompartmentState::Vector k1 = derivatives(y, p);
  const CompartmentState::Vector k2 = derivatives((y + (0.5 * h) * k1).eval(), p);
  const CompartmentState::Vector k3 = derivatives((y + (0.5 * h) * k2).eval(), p);
  const CompartmentState::Vector k4 = derivatives((y + h * k3).eval(), p);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_step(const CompartmentState::Vector& y) {
  for (int i = 0; i < 9; ++i)
    if (y[i] < -1e-9)
      throw std::runtime_error("rk4 step drove compartment " + std::to_string(i) +
                               " to " + std::to_string(y[i]) + "; reduce the step size");
}

CompartmentState clamp_roundoff(const CompartmentState::Vector& y) {
  CompartmentState::Vector out = y;
  for (int i = 0; i < CompartmentState::kSize; ++i)
    if (out[i] < 0.0 && out[i] >= -1e-9) out[i] = 0.0;
  return CompartmentState::from_vector(out);
}

}  // namespace

CompartmentState rk4_step(const CompartmentState& state, const ModelParams& params, double h) {
  if (!(h > 0)) throw std::invalid_argument("rk4 step: h must be > 0");
  params.validate();
  const CompartmentState::Vector next = rk4_advance(state.to_vector(), params, h);
  check_step(next);
  return CompartmentState::from_vector(next);
}

Trajectory integrate(const CompartmentState& initial, const ModelParams& params, double h,
                     std::size_t n_steps) {
  if (!(h > 0)) throw std::invalid_argument("integrate: h must be > 0");
  params.validate();
  initial.validate();

  Trajectory traj;
  traj.h = h;
  traj.params = params;
  traj.states.reserve(n_steps + 1);
  traj.states.push_back(clamp_roundoff(initial.to_vector()));

  CompartmentState::Vector y = initial.to_vector();
  for (std::size_t step = 0; step < n_steps; ++step) {
    y = rk4_advance(y, params, h);
    try {
      check_step(y);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("integrate: step " + std::to_string(step + 1) + ": " + e.what());
    }
    traj.states.push_back(clamp_roundoff(y));
  }
  return traj;
}

std::pair<double, double> effective_rates(const ModelParams& params) {
  params.validate();
  return {params.beta_i_hat(), params.beta_a_hat()};
}

}  // namespace infodemic
