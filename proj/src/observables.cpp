#include "infodemic/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace infodemic {

namespace {

void require_nonempty(const Trajectory& traj) {
  if (traj.states.empty()) throw std::invalid_argument("trajectory is empty");
}

}  // namespace

double final_size(const Trajectory& traj) {
  require_nonempty(traj);
  return traj.back().recovered();
}

std::pair<double, double> peak_prevalence(const Trajectory& traj) {
  require_nonempty(traj);
  double best = traj.states[0].infected();
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double v = traj.states[i].infected();
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  return {best, traj.time(best_i)};
}

Observables observables(const Trajectory& traj) {
  Observables obs;
  obs.r_star = final_size(traj);
  const auto [i_m, t_m] = peak_prevalence(traj);
  obs.i_m = i_m;
  obs.t_m = t_m;
  return obs;
}

bool check_absorbed(const Trajectory& traj, double threshold) {
  require_nonempty(traj);
  return traj.back().infected() < threshold;
}

EquilibriumDecomposition decomposition_at_horizon(const Trajectory& traj) {
  require_nonempty(traj);
  const CompartmentState& end = traj.back();
  EquilibriumDecomposition d;
  d.r1_red = end.flux_red;
  d.r2_green = end.flux_green;
  d.r3_blue = end.flux_blue;
  d.residual_ur = end.ur;
  return d;
}

EquilibriumDecomposition decompose_equilibrium(const Trajectory& traj, double absorb_threshold) {
  if (!check_absorbed(traj, absorb_threshold))
    throw std::runtime_error("decompose_equilibrium: trajectory has not absorbed (prevalence " +
                             std::to_string(traj.back().infected()) + " at horizon)");
  return decomposition_at_horizon(traj);
}

TimeSeries incidence_series(const Trajectory& traj) {
  require_nonempty(traj);
  const ModelParams& p = traj.params;
  const std::size_t n_days = static_cast<std::size_t>(std::floor(traj.time(traj.size() - 1))) + 1;

  TimeSeries out;
  out.time.resize(n_days);
  out.value.assign(n_days, 0.0);
  for (std::size_t d = 0; d < n_days; ++d) out.time[d] = static_cast<double>(d);

  for (std::size_t i = 0; i < traj.size(); ++i) {
    const CompartmentState& s = traj.states[i];
    const double rate = p.beta_i * s.infected() * s.us +
                        p.beta_i_hat() * s.infected() * (s.a1s + s.a2s);
    const auto day = static_cast<std::size_t>(std::floor(traj.time(i)));
    out.value[day] += traj.h * rate;
  }
  return out;
}

TimeSeries awareness_incidence_series(const Trajectory& traj) {
  require_nonempty(traj);
  const std::size_t n_days = static_cast<std::size_t>(std::floor(traj.time(traj.size() - 1))) + 1;

  // first sample index of each day; one-past-the-end closes the last day,
  // days without samples (h > 1) borrow the next day's boundary (zero flow)
  std::vector<std::size_t> first(n_days + 1, traj.size());
  for (std::size_t i = traj.size(); i-- > 0;) {
    const auto day = static_cast<std::size_t>(std::floor(traj.time(i)));
    first[day] = i;
  }
  for (std::size_t d = n_days; d-- > 0;)
    if (first[d] == traj.size()) first[d] = first[d + 1];

  TimeSeries out;
  out.time.resize(n_days);
  out.value.resize(n_days);
  for (std::size_t d = 0; d < n_days; ++d) {
    out.time[d] = static_cast<double>(d);
    const double lo = traj.states[first[d]].flux_aware;
    const double hi = (first[d + 1] < traj.size()) ? traj.states[first[d + 1]].flux_aware
                                                   : traj.back().flux_aware;
    out.value[d] = hi - lo;
  }
  return out;
}

}  // namespace infodemic
