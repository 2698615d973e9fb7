#include "infodemic/reproduction.hpp"

#include <cmath>
#include <stdexcept>

namespace infodemic {

NgmPair ngm_matrices(const ModelParams& params, const CompartmentState& initial) {
  params.validate();
  const double us0 = initial.us;
  const double a1s0 = initial.a1s;
  const double a2s0 = initial.a2s;
  const double b = params.beta_a_hat() * a1s0;  // awareness conversion rate of UI

  NgmPair ngm;
  ngm.f_matrix.row(0).setConstant(params.beta_i * us0);
  ngm.f_matrix.row(1).setConstant(params.beta_i_hat() * a1s0);
  ngm.f_matrix.row(2).setConstant(params.beta_i_hat() * a2s0);

  ngm.v_matrix << b + params.gamma_i, 0.0, 0.0,
                  -b, params.gamma_a + params.gamma_i, 0.0,
                  0.0, -params.gamma_a, params.gamma_i;
  return ngm;
}

double r0_eff_closed_form(const ModelParams& params, const CompartmentState& initial) {
  params.validate();
  return params.beta_i / params.gamma_i * (initial.us + params.alpha_1 * initial.a1s);
}

double spectral_r0(const NgmPair& ngm) {
  const Eigen::Matrix3d k = ngm.f_matrix * ngm.v_matrix.inverse();
  if (!k.allFinite()) throw std::runtime_error("spectral_r0: singular V matrix");

  Eigen::Vector3d x = Eigen::Vector3d::Ones() / std::sqrt(3.0);
  double lambda = 0.0;
  constexpr int kMaxIter = 10000;
  for (int i = 0; i < kMaxIter; ++i) {
    const Eigen::Vector3d y = k * x;
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;  // nilpotent/zero K: spectral radius 0
    const double next = x.dot(y);  // Rayleigh quotient, |next| -> |lambda_max|
    x = y / norm;
    if (std::abs(next - lambda) <= 1e-14 * std::max(1.0, std::abs(next))) return std::abs(next);
    lambda = next;
  }
  throw std::runtime_error("spectral_r0: power iteration did not converge");
}

double r0_long_sum(const ModelParams& params, const CompartmentState& initial) {
  params.validate();
  const double us0 = initial.us;
  const double a1s0 = initial.a1s;
  const double a2s0 = initial.a2s;
  const double b = params.beta_a_hat() * a1s0;
  const double gi = params.gamma_i;
  const double ga = params.gamma_a;

  const double unaware = params.beta_i * us0 *
                         (1.0 / (b + gi) + b / ((b + gi) * (ga + gi)) +
                          b * ga / ((b + gi) * (ga + gi) * gi));
  const double active = params.beta_i_hat() * a1s0 * (1.0 / (ga + gi) + ga / ((ga + gi) * gi));
  const double inactive = params.beta_i_hat() * a2s0 / gi;
  return unaware + active + inactive;
}

TimeSeries rt_eff_series(const Trajectory& traj, const ModelParams& params) {
  if (traj.states.empty()) throw std::invalid_argument("rt_eff_series: empty trajectory");
  params.validate();

  TimeSeries out;
  out.time.reserve(traj.size());
  out.value.reserve(traj.size());
  const double scale = params.beta_i / params.gamma_i;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const CompartmentState& s = traj.states[i];
    out.time.push_back(traj.time(i));
    out.value.push_back(scale * (s.us + params.alpha_1 * (s.a1s + s.a2s)));
  }
  return out;
}

}  // namespace infodemic
