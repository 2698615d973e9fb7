#include "infodemic/fit.hpp"

#include "infodemic/observables.hpp"
#include "infodemic/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace infodemic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_free_param_name(const std::string& name) {
  return name == "alpha_1" || name == "beta_a";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) v[i] = lo + step * static_cast<double>(i);
  v[n - 1] = hi;
  return v;
}

}  // namespace

FitBounds FitSpec::bounds_for(const std::string& name) const {
  const auto it = bounds.find(name);
  if (it != bounds.end()) return it->second;
  if (name == "alpha_1") return {0.0, 1.0};
  if (name == "beta_a") return {0.01, 0.5};
  throw std::invalid_argument("fit: no bounds known for parameter \"" + name + "\"");
}

void FitSpec::validate() const {
  if (free.empty()) {
    throw std::invalid_argument("fit: at least one free parameter is required");
  }
  std::set<std::string> seen;
  for (const std::string& name : free) {
    if (!is_free_param_name(name)) {
      throw std::invalid_argument("fit: parameter \"" + name +
                                  "\" cannot be freed; choose from alpha_1, beta_a");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("fit: parameter \"" + name + "\" listed twice");
    }
    const FitBounds b = bounds_for(name);
    if (!(b.lo < b.hi)) {
      throw std::invalid_argument("fit: bounds for " + name + " are empty");
    }
    if (name == "alpha_1" && (b.lo < 0 || b.hi > 1)) {
      throw std::invalid_argument("fit: alpha_1 bounds must lie inside [0, 1]");
    }
    if (name == "beta_a" && b.lo < 0) {
      throw std::invalid_argument("fit: beta_a bounds must be non-negative");
    }
  }
  fixed.validate();
  if (target.size() < 10) {
    throw std::invalid_argument("fit: target wave has " + std::to_string(target.size()) +
                                " days, need at least 10");
  }
  for (double v : target) {
    if (!std::isfinite(v)) throw std::invalid_argument("fit: target contains non-finite values");
  }
  if (!(target.front() > 0 && target.front() < 0.5)) {
    throw std::invalid_argument(
        "fit: first target value seeds the initial infected fraction and must lie in (0, 0.5); "
        "shift the wave start to a day with positive smoothed incidence");
  }
  if (!(a1s_seed >= 0) || target.front() + a1s_seed >= 1) {
    throw std::invalid_argument("fit: invalid awareness seed");
  }
  if (!(t0_max > 0)) throw std::invalid_argument("fit: t0_max must be positive");
  if (!(h > 0)) throw std::invalid_argument("fit: step size must be positive");
  if (grid_points < 2) throw std::invalid_argument("fit: grid needs at least 2 points per axis");
  if (static_cast<double>(horizon_margin_days) < t0_max) {
    throw std::invalid_argument("fit: horizon_margin_days must be >= t0_max so shifted "
                                "model series cover the data window");
  }
}

std::vector<double> fit_model_series(const FitSpec& spec, double alpha_1, double beta_a) {
  ModelParams p = spec.fixed;
  p.alpha_1 = alpha_1;
  p.beta_a = beta_a;
  const double n_days = static_cast<double>(spec.target.size() + spec.horizon_margin_days);
  const auto n_steps = static_cast<std::size_t>(std::llround(n_days / spec.h));
  const Trajectory traj =
      integrate(seeded_state(spec.target.front(), spec.a1s_seed), p, spec.h, n_steps);
  return incidence_series(traj).value;
}

namespace detail {

std::vector<double> shift_series(const std::vector<double>& series, double t0,
                                 std::size_t out_len) {
  std::vector<double> out(out_len, 0.0);
  if (series.empty()) return out;
  const double last = static_cast<double>(series.size()) - 1;
  for (std::size_t d = 0; d < out_len; ++d) {
    const double x = static_cast<double>(d) - t0;
    if (x < 0 || x > last) continue;
    const auto i0 = static_cast<std::size_t>(std::floor(x));
    const std::size_t i1 = std::min(i0 + 1, series.size() - 1);
    const double f = x - static_cast<double>(i0);
    out[d] = (1 - f) * series[i0] + f * series[i1];
  }
  return out;
}

double least_squares_scale(const std::vector<double>& model, const std::vector<double>& target) {
  if (model.size() != target.size()) {
    throw std::invalid_argument("least_squares_scale: length mismatch");
  }
  const double den = std::inner_product(model.begin(), model.end(), model.begin(), 0.0);
  if (den <= 0) return 0;
  const double num = std::inner_product(target.begin(), target.end(), model.begin(), 0.0);
  return std::max(num / den, 1e-300);
}

NmResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                     const Eigen::VectorXd& x0, const Eigen::VectorXd& steps,
                     int max_iterations, double f_tol) {
  const auto n = static_cast<std::size_t>(x0.size());
  if (static_cast<std::size_t>(steps.size()) != n || n == 0) {
    throw std::invalid_argument("nelder_mead: steps must match a non-empty x0");
  }

  std::vector<Eigen::VectorXd> pts;
  pts.reserve(n + 1);
  pts.push_back(x0);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::VectorXd p = x0;
    p[static_cast<Eigen::Index>(i)] += steps[static_cast<Eigen::Index>(i)];
    pts.push_back(p);
  }
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&]() {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<Eigen::VectorXd> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts.swap(p2);
    vals.swap(v2);
  };

  for (int it = 0; it < max_iterations; ++it) {
    sort_simplex();
    if (vals[n] - vals[0] <= f_tol * (vals[0] + 1e-300)) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) centroid += pts[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - pts[n]);
    const double f_reflected = f(reflected);
    if (f_reflected < vals[0]) {
      const Eigen::VectorXd expanded = centroid + 2 * (centroid - pts[n]);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        pts[n] = expanded;
        vals[n] = f_expanded;
      } else {
        pts[n] = reflected;
        vals[n] = f_reflected;
      }
    } else if (f_reflected < vals[n - 1]) {
      pts[n] = reflected;
      vals[n] = f_reflected;
    } else {
      const Eigen::VectorXd contracted = centroid + 0.5 * (pts[n] - centroid);
      const double f_contracted = f(contracted);
      if (f_contracted < vals[n]) {
        pts[n] = contracted;
        vals[n] = f_contracted;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }
  sort_simplex();
  return {pts[0], vals[0]};
}

ProfileSide solve_profile_crossing(const std::function<double(double)>& profile_value,
                                   double center, double bound, double target,
                                   double initial_step, int bisect_iterations) {
  if (!(initial_step > 0)) {
    throw std::invalid_argument("solve_profile_crossing: initial_step must be positive");
  }
  const double direction = bound >= center ? 1.0 : -1.0;
  if (std::abs(bound - center) <= 0) return {bound, true};

  double inner = center;
  double outer = bound;
  bool found_outer = false;
  for (double dist = initial_step; !found_outer; dist *= 2) {
    const double cand = center + direction * dist;
    const bool past_bound = direction > 0 ? cand >= bound : cand <= bound;
    if (past_bound) {
      if (profile_value(bound) <= target) return {bound, true};
      outer = bound;
      found_outer = true;
    } else if (profile_value(cand) > target) {
      outer = cand;
      found_outer = true;
    } else {
      inner = cand;
    }
  }

  double a = inner;
  double b = outer;
  for (int i = 0; i < bisect_iterations; ++i) {
    const double mid = 0.5 * (a + b);
    if (profile_value(mid) > target) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return {0.5 * (a + b), false};
}

}  // namespace detail

namespace {

/// SSE objective over theta = [free..., log_scale, t0]; +inf outside the
/// boxes, +inf (and a count) when the candidate integration throws.
class WaveObjective {
 public:
  explicit WaveObjective(const FitSpec& spec) : spec_(spec) {
    for (const std::string& name : spec.free) {
      boxes_.push_back(spec.bounds_for(name));
      is_alpha_.push_back(name == "alpha_1");
    }
  }

  double operator()(const Eigen::VectorXd& theta) const {
    const auto nf = static_cast<Eigen::Index>(boxes_.size());
    for (Eigen::Index i = 0; i < nf; ++i) {
      if (theta[i] < boxes_[i].lo || theta[i] > boxes_[i].hi) return kInf;
    }
    const double t0 = theta[nf + 1];
    if (std::abs(t0) > spec_.t0_max) return kInf;

    double alpha_1 = spec_.fixed.alpha_1;
    double beta_a = spec_.fixed.beta_a;
    for (Eigen::Index i = 0; i < nf; ++i) {
      (is_alpha_[static_cast<std::size_t>(i)] ? alpha_1 : beta_a) = theta[i];
    }

    std::vector<double> model;
    try {
      model = fit_model_series(spec_, alpha_1, beta_a);
    } catch (const std::exception&) {
      ++failed_candidates_;
      return kInf;
    }
    const std::vector<double> shifted =
        detail::shift_series(model, t0, spec_.target.size());
    const double scale = std::exp(theta[nf]);
    double sse = 0;
    for (std::size_t d = 0; d < shifted.size(); ++d) {
      const double r = scale * shifted[d] - spec_.target[d];
      sse += r * r;
    }
    return sse;
  }

  std::size_t failed_candidates() const { return failed_candidates_; }

 private:
  const FitSpec& spec_;
  std::vector<FitBounds> boxes_;
  std::vector<bool> is_alpha_;
  mutable std::size_t failed_candidates_ = 0;
};

/// Per-restart Nelder-Mead initial steps, by theta slot.
double initial_step_for(const std::string& slot, int restart) {
  static const std::map<std::string, std::array<double, 3>> kSteps = {
      {"alpha_1", {0.05, 0.01, 0.002}},
      {"beta_a", {0.02, 0.004, 0.001}},
      {"log_scale", {0.1, 0.02, 0.005}},
      {"t0", {1.0, 0.2, 0.05}},
  };
  return kSteps.at(slot)[static_cast<std::size_t>(restart)];
}

Eigen::VectorXd theta_from_fit(const FitSpec& spec, const WaveFit& fit) {
  const auto nf = static_cast<Eigen::Index>(spec.free.size());
  Eigen::VectorXd theta(nf + 2);
  for (Eigen::Index i = 0; i < nf; ++i) {
    theta[i] = spec.free[static_cast<std::size_t>(i)] == "alpha_1" ? fit.alpha_1 : fit.beta_a;
  }
  theta[nf] = std::log(fit.scale);
  theta[nf + 1] = fit.t0;
  return theta;
}

}  // namespace

WaveFit fit_wave(const FitSpec& spec) {
  spec.validate();
  const std::size_t nf = spec.free.size();
  const WaveObjective objective(spec);

  // Stage 1: coarse grid over the free parameters, scale in closed form,
  // t0 over a 2-day comb.
  std::vector<std::vector<double>> grids;
  for (const std::string& name : spec.free) {
    const FitBounds b = spec.bounds_for(name);
    grids.push_back(linspace(b.lo, b.hi, spec.grid_points));
  }
  std::vector<double> t0_grid;
  for (double t = -10; t <= 10 + 1e-9; t += 2) {
    if (std::abs(t) <= spec.t0_max) t0_grid.push_back(t);
  }

  double best_sse = kInf;
  Eigen::VectorXd best_theta(static_cast<Eigen::Index>(nf) + 2);
  std::size_t grid_failures = 0;

  std::vector<std::size_t> idx(nf, 0);
  for (;;) {
    double alpha_1 = spec.fixed.alpha_1;
    double beta_a = spec.fixed.beta_a;
    for (std::size_t i = 0; i < nf; ++i) {
      (spec.free[i] == "alpha_1" ? alpha_1 : beta_a) = grids[i][idx[i]];
    }

    std::vector<double> model;
    bool ok = true;
    try {
      model = fit_model_series(spec, alpha_1, beta_a);
    } catch (const std::exception&) {
      ++grid_failures;
      ok = false;
    }
    if (ok) {
      for (const double t0 : t0_grid) {
        const std::vector<double> shifted =
            detail::shift_series(model, t0, spec.target.size());
        const double scale = detail::least_squares_scale(shifted, spec.target);
        if (scale <= 0) continue;
        double sse = 0;
        for (std::size_t d = 0; d < shifted.size(); ++d) {
          const double r = scale * shifted[d] - spec.target[d];
          sse += r * r;
        }
        if (sse < best_sse) {
          best_sse = sse;
          for (std::size_t i = 0; i < nf; ++i) {
            best_theta[static_cast<Eigen::Index>(i)] = grids[i][idx[i]];
          }
          best_theta[static_cast<Eigen::Index>(nf)] = std::log(scale);
          best_theta[static_cast<Eigen::Index>(nf) + 1] = t0;
        }
      }
    }

    // Odometer over the free-parameter grid.
    std::size_t carry = 0;
    while (carry < nf && ++idx[carry] == grids[carry].size()) {
      idx[carry] = 0;
      ++carry;
    }
    if (carry == nf) break;
  }

  if (!std::isfinite(best_sse)) {
    throw std::runtime_error("fit: every grid candidate failed (check bounds and target)");
  }

  // Stage 2: simplex refinement, three restarts with shrinking steps.
  detail::NmResult result{best_theta, best_sse};
  for (int restart = 0; restart < 3; ++restart) {
    Eigen::VectorXd steps(static_cast<Eigen::Index>(nf) + 2);
    for (std::size_t i = 0; i < nf; ++i) {
      steps[static_cast<Eigen::Index>(i)] = initial_step_for(spec.free[i], restart);
    }
    steps[static_cast<Eigen::Index>(nf)] = initial_step_for("log_scale", restart);
    steps[static_cast<Eigen::Index>(nf) + 1] = initial_step_for("t0", restart);
    result = detail::nelder_mead(objective, result.x, steps, 300, 1e-13);
  }

  WaveFit fit;
  fit.alpha_1 = spec.fixed.alpha_1;
  fit.beta_a = spec.fixed.beta_a;
  for (std::size_t i = 0; i < nf; ++i) {
    (spec.free[i] == "alpha_1" ? fit.alpha_1 : fit.beta_a) =
        result.x[static_cast<Eigen::Index>(i)];
  }
  fit.scale = std::exp(result.x[static_cast<Eigen::Index>(nf)]);
  fit.t0 = result.x[static_cast<Eigen::Index>(nf) + 1];
  fit.sse = result.value;

  if (objective.failed_candidates() + grid_failures > 0) {
    std::cerr << "fit: discarded " << (objective.failed_candidates() + grid_failures)
              << " candidates whose integration failed\n";
  }

  for (const std::string& name : spec.free) {
    fit.intervals[name] = profile_interval(spec, fit, name);
  }
  return fit;
}

IntervalEstimate profile_interval(const FitSpec& spec, const WaveFit& fit,
                                  const std::string& param, double threshold) {
  spec.validate();
  const auto free_it = std::find(spec.free.begin(), spec.free.end(), param);
  if (free_it == spec.free.end()) {
    throw std::invalid_argument("profile_interval: \"" + param +
                                "\" is not a free parameter of this fit");
  }
  if (threshold < 0) {
    throw std::invalid_argument("profile_interval: threshold must be non-negative");
  }
  const auto pi = static_cast<Eigen::Index>(free_it - spec.free.begin());
  const double value = param == "alpha_1" ? fit.alpha_1 : fit.beta_a;
  if (threshold == 0) return {value, value, false, false};

  const FitBounds box = spec.bounds_for(param);
  const double target = fit.sse * (1 + threshold);
  const WaveObjective objective(spec);
  const Eigen::VectorXd theta_fit = theta_from_fit(spec, fit);
  const auto dims = theta_fit.size();

  // Remaining-dimension layout: theta without slot pi.
  Eigen::VectorXd others_fit(dims - 1);
  Eigen::VectorXd other_steps(dims - 1);
  std::vector<std::string> slots;
  for (std::size_t i = 0; i < spec.free.size(); ++i) slots.push_back(spec.free[i]);
  slots.emplace_back("log_scale");
  slots.emplace_back("t0");
  static const std::map<std::string, double> kProfileSteps = {
      {"alpha_1", 0.008}, {"beta_a", 0.003}, {"log_scale", 0.02}, {"t0", 0.25}};
  for (Eigen::Index i = 0, j = 0; i < dims; ++i) {
    if (i == pi) continue;
    others_fit[j] = theta_fit[i];
    other_steps[j] = kProfileSteps.at(slots[static_cast<std::size_t>(i)]);
    ++j;
  }

  // Profile SSE at a pinned parameter value, re-optimizing everything else;
  // the warm start follows the last in-target solution outward.
  auto run_side = [&](double bound) {
    Eigen::VectorXd warm = others_fit;
    auto profile_sse = [&](double pinned) {
      auto with_pin = [&](const Eigen::VectorXd& others) {
        Eigen::VectorXd full(dims);
        for (Eigen::Index i = 0, j = 0; i < dims; ++i) {
          full[i] = i == pi ? pinned : others[j++];
        }
        return objective(full);
      };
      const detail::NmResult r = detail::nelder_mead(with_pin, warm, other_steps, 120, 1e-13);
      if (r.value <= target) warm = r.x;
      return r.value;
    };
    return detail::solve_profile_crossing(profile_sse, value, bound, target,
                                          (box.hi - box.lo) / 100.0, 9);
  };

  const detail::ProfileSide lo_side = run_side(box.lo);
  const detail::ProfileSide hi_side = run_side(box.hi);
  return {lo_side.endpoint, hi_side.endpoint, lo_side.censored, hi_side.censored};
}

std::vector<double> fit_prediction(const FitSpec& spec, const WaveFit& fit) {
  spec.validate();
  const std::vector<double> model = fit_model_series(spec, fit.alpha_1, fit.beta_a);
  std::vector<double> out = detail::shift_series(model, fit.t0, spec.target.size());
  for (double& v : out) v *= fit.scale;
  return out;
}

ParamTable build_param_table(
    const std::map<std::string, std::map<std::string, WaveFit>>& fits,
    const std::map<std::string, double>& rankings,
    const std::map<std::string, std::map<std::string, double>>& extra_indices) {
  ParamTable table;
  for (const auto& entry : extra_indices) table.extra_columns.push_back(entry.first);

  for (const auto& [region, waves] : fits) {
    ParamTableRow row;
    row.region = region;
    for (std::size_t w = 0; w < row.waves.size(); ++w) {
      const auto it = waves.find("p" + std::to_string(w + 1));
      if (it != waves.end()) {
        row.waves[w].alpha_1 = it->second.alpha_1;
        row.waves[w].beta_a = it->second.beta_a;
      }
    }
    const auto rank_it = rankings.find(region);
    if (rank_it != rankings.end()) row.ranking = rank_it->second;
    if (std::isfinite(row.waves[0].alpha_1) && std::isfinite(row.waves[1].alpha_1)) {
      row.d_alpha_1 = row.waves[0].alpha_1 - row.waves[1].alpha_1;
    }
    if (std::isfinite(row.waves[0].beta_a) && std::isfinite(row.waves[1].beta_a)) {
      row.d_beta_a = row.waves[0].beta_a - row.waves[1].beta_a;
    }
    for (const std::string& col : table.extra_columns) {
      const auto& values = extra_indices.at(col);
      const auto it = values.find(region);
      if (it != values.end()) row.extra[col] = it->second;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_cell(const std::string& text, const std::string& column, std::size_t line_no) {
  if (text.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t consumed = 0;
  double v = 0;
  try {
    v = std::stod(text, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != text.size()) {
    throw std::invalid_argument("parameter table line " + std::to_string(line_no) +
                                ": column " + column + " has non-numeric value \"" + text + "\"");
  }
  return v;
}

}  // namespace

ParamTable read_param_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter table: " + path);

  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("parameter table is empty: " + path);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_csv_line(line);

  const std::vector<std::string> required = {"region",    "alpha1_p1", "beta_a_p1",
                                             "alpha1_p2", "beta_a_p2", "alpha1_p3",
                                             "beta_a_p3"};
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!col.emplace(header[i], i).second) {
      throw std::invalid_argument("parameter table: duplicate column \"" + header[i] + "\"");
    }
  }
  for (const std::string& name : required) {
    if (!col.count(name)) {
      throw std::invalid_argument("parameter table: missing column \"" + name + "\" in " + path);
    }
  }

  ParamTable table;
  std::set<std::string> known(required.begin(), required.end());
  known.insert("ranking");
  for (const std::string& name : header) {
    if (!known.count(name)) table.extra_columns.push_back(name);
  }

  std::set<std::string> regions;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("parameter table line " + std::to_string(line_no) + ": has " +
                                  std::to_string(fields.size()) + " fields, header has " +
                                  std::to_string(header.size()));
    }
    ParamTableRow row;
    row.region = fields[col.at("region")];
    if (row.region.empty()) {
      throw std::invalid_argument("parameter table line " + std::to_string(line_no) +
                                  ": empty region");
    }
    if (!regions.insert(row.region).second) {
      throw std::invalid_argument("parameter table line " + std::to_string(line_no) +
                                  ": duplicate region \"" + row.region + "\"");
    }
    for (std::size_t w = 0; w < 3; ++w) {
      const std::string suffix = "_p" + std::to_string(w + 1);
      row.waves[w].alpha_1 =
          parse_cell(fields[col.at("alpha1" + suffix)], "alpha1" + suffix, line_no);
      row.waves[w].beta_a =
          parse_cell(fields[col.at("beta_a" + suffix)], "beta_a" + suffix, line_no);
    }
    if (col.count("ranking")) {
      row.ranking = parse_cell(fields[col.at("ranking")], "ranking", line_no);
    }
    for (const std::string& name : table.extra_columns) {
      const double v = parse_cell(fields[col.at(name)], name, line_no);
      if (std::isfinite(v)) row.extra[name] = v;
    }
    if (std::isfinite(row.waves[0].alpha_1) && std::isfinite(row.waves[1].alpha_1)) {
      row.d_alpha_1 = row.waves[0].alpha_1 - row.waves[1].alpha_1;
    }
    if (std::isfinite(row.waves[0].beta_a) && std::isfinite(row.waves[1].beta_a)) {
      row.d_beta_a = row.waves[0].beta_a - row.waves[1].beta_a;
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) {
    throw std::invalid_argument("parameter table has no data rows: " + path);
  }
  return table;
}

namespace {

std::function<double(const ParamTableRow&)> column_accessor(const ParamTable& table,
                                                            const std::string& name) {
  static const std::map<std::string, std::pair<std::size_t, bool>> kWaveColumns = {
      {"alpha1_p1", {0, true}}, {"beta_a_p1", {0, false}}, {"alpha1_p2", {1, true}},
      {"beta_a_p2", {1, false}}, {"alpha1_p3", {2, true}}, {"beta_a_p3", {2, false}},
  };
  const auto wave_it = kWaveColumns.find(name);
  if (wave_it != kWaveColumns.end()) {
    const auto [w, is_alpha] = wave_it->second;
    return [w, is_alpha](const ParamTableRow& row) {
      return is_alpha ? row.waves[w].alpha_1 : row.waves[w].beta_a;
    };
  }
  if (name == "ranking") return [](const ParamTableRow& r) { return r.ranking; };
  // d_alpha_a is an accepted alias: some reports call the awareness delta
  // by that name without defining it.
  if (name == "d_alpha_1" || name == "d_alpha_a") {
    return [](const ParamTableRow& r) { return r.d_alpha_1; };
  }
  if (name == "d_beta_a") return [](const ParamTableRow& r) { return r.d_beta_a; };
  for (const std::string& extra : table.extra_columns) {
    if (extra == name) {
      return [name](const ParamTableRow& r) {
        const auto it = r.extra.find(name);
        return it != r.extra.end() ? it->second : std::numeric_limits<double>::quiet_NaN();
      };
    }
  }
  throw std::invalid_argument("correlate_table: unknown column \"" + name + "\"");
}

}  // namespace

std::vector<CorrelationEntry> correlate_table(
    const ParamTable& table,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<CorrelationEntry> report;
  report.reserve(pairs.size());
  for (const auto& [name_a, name_b] : pairs) {
    CorrelationEntry entry;
    entry.pair = name_a + "~" + name_b;
    const auto get_a = column_accessor(table, name_a);
    const auto get_b = column_accessor(table, name_b);

    std::vector<double> a;
    std::vector<double> b;
    for (const ParamTableRow& row : table.rows) {
      const double va = get_a(row);
      const double vb = get_b(row);
      if (std::isfinite(va) && std::isfinite(vb)) {
        a.push_back(va);
        b.push_back(vb);
      }
    }
    entry.n = a.size();
    if (a.size() < 3) {
      entry.error = "only " + std::to_string(a.size()) + " complete rows, need at least 3";
    } else {
      try {
        const PearsonResult r = pearson(a, b);
        entry.rho = r.rho;
        entry.p_value = r.p_value;
      } catch (const std::invalid_argument& e) {
        entry.error = e.what();
      }
    }
    report.push_back(std::move(entry));
  }
  return report;
}

}  // namespace infodemic
