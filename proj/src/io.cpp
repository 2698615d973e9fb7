#include "infodemic/io.hpp"

#include "json.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace infodemic {

std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string reason = std::strerror(errno);
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + reason);
  }
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out =
      "t,US,A1S,A2S,UI,A1I,A2I,UR,A1R,A2R,flux_blue,flux_green,flux_red,flux_aware\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const CompartmentState& s = traj.states[i];
    out += format_g17(traj.time(i));
    for (const double v : {s.us, s.a1s, s.a2s, s.ui, s.a1i, s.a2i, s.ur, s.a1r, s.a2r,
                           s.flux_blue, s.flux_green, s.flux_red, s.flux_aware}) {
      out += ',';
      out += format_g17(v);
    }
    out += '\n';
  }
  return out;
}

std::string heatmap_csv(const Heatmap& map) {
  std::string out =
      "x,y,r_star,i_m,t_m,r1_red,r2_green,r3_blue,residual_ur,pearson_rho,absorbed\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t iy = 0; iy < map.y_values.size(); ++iy) {
    for (std::size_t ix = 0; ix < map.x_values.size(); ++ix) {
      const SweepCell& cell = map.at(ix, iy);
      const bool failed = !cell.error.empty();
      out += format_g17(map.x_values[ix]);
      out += ',';
      out += format_g17(map.y_values[iy]);
      for (const double v :
           {failed ? nan : cell.obs.r_star, failed ? nan : cell.obs.i_m,
            failed ? nan : cell.obs.t_m, failed ? nan : cell.decomposition.r1_red,
            failed ? nan : cell.decomposition.r2_green, failed ? nan : cell.decomposition.r3_blue,
            failed ? nan : cell.decomposition.residual_ur, cell.pearson_rho}) {
        out += ',';
        out += format_g17(v);
      }
      out += cell.absorbed ? ",1\n" : ",0\n";
    }
  }
  return out;
}

std::string sweep_spec_json(const Heatmap& map) {
  const SweepSpec& spec = map.spec;
  nlohmann::ordered_json j;
  j["base"] = {{"beta_i_per_day", spec.base.beta_i},   {"alpha_1", spec.base.alpha_1},
               {"alpha_2", spec.base.alpha_2},         {"beta_a_per_day", spec.base.beta_a},
               {"gamma_i_per_day", spec.base.gamma_i}, {"gamma_a_per_day", spec.base.gamma_a}};
  for (const auto& [label, axis] : {std::pair<const char*, const AxisSpec&>{"x", spec.x},
                                    std::pair<const char*, const AxisSpec&>{"y", spec.y}}) {
    j[label] = {{"name", axis.name}, {"min", axis.min}, {"max", axis.max}, {"n", axis.n}};
  }
  j["with_decomposition"] = spec.with_decomposition;
  j["with_pearson"] = spec.with_pearson;
  j["step_days"] = spec.h;
  j["n_steps"] = spec.n_steps;
  j["initial_ui"] = spec.ui0;
  j["initial_a1s"] = spec.a1s0;
  j["absorb_threshold"] = spec.absorb_threshold;

  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (std::size_t iy = 0; iy < map.y_values.size(); ++iy) {
    for (std::size_t ix = 0; ix < map.x_values.size(); ++ix) {
      const SweepCell& cell = map.at(ix, iy);
      if (!cell.error.empty()) {
        errors.push_back({{"ix", ix}, {"iy", iy}, {"error", cell.error}});
      }
    }
  }
  if (!errors.empty()) j["cell_errors"] = errors;
  return j.dump(2) + "\n";
}

std::string correlation_csv(const std::vector<CorrelationEntry>& entries) {
  std::string out = "pair,rho,p_value,n\n";
  for (const CorrelationEntry& entry : entries) {
    if (!entry.error.empty()) continue;
    out += entry.pair + ',' + format_g17(entry.rho) + ',' + format_g17(entry.p_value) + ',' +
           std::to_string(entry.n) + '\n';
  }
  return out;
}

std::string cross_correlation_csv(const TimeSeries& lags) {
  std::string out = "lag_days,rho\n";
  for (std::size_t i = 0; i < lags.size(); ++i) {
    out += format_g17(lags.time[i]) + ',' + format_g17(lags.value[i]) + '\n';
  }
  return out;
}

std::string clean_series_csv(const RegionSeries& series) {
  std::string out = "date,raw_daily,smoothed,fraction\n";
  for (std::size_t i = 0; i < series.dates.size(); ++i) {
    out += series.dates[i].to_string() + ',' + format_g17(series.raw_daily[i]) + ',' +
           format_g17(series.smoothed[i]) + ',' + format_g17(series.fraction[i]) + '\n';
  }
  return out;
}

namespace {

std::string table_cell(double v) { return std::isfinite(v) ? format_g17(v) : ""; }

}  // namespace

std::string param_table_csv(const ParamTable& table) {
  std::string out = "region,alpha1_p1,beta_a_p1,alpha1_p2,beta_a_p2,alpha1_p3,beta_a_p3,"
                    "ranking,d_alpha_1,d_beta_a";
  for (const std::string& extra : table.extra_columns) out += ',' + extra;
  out += '\n';

  for (const ParamTableRow& row : table.rows) {
    out += row.region;
    for (const WaveParams& wave : row.waves) {
      out += ',' + table_cell(wave.alpha_1) + ',' + table_cell(wave.beta_a);
    }
    out += ',' + table_cell(row.ranking) + ',' + table_cell(row.d_alpha_1) + ',' +
           table_cell(row.d_beta_a);
    for (const std::string& extra : table.extra_columns) {
      const auto it = row.extra.find(extra);
      out += ',' + (it != row.extra.end() ? table_cell(it->second) : std::string());
    }
    out += '\n';
  }
  return out;
}

std::string ngm_json(double r0_eff, double spectral_r0, double r0_long_sum,
                     const TimeSeries& rt_series) {
  nlohmann::ordered_json j;
  j["r0_eff"] = r0_eff;
  j["spectral_r0"] = spectral_r0;
  j["r0_long_sum"] = r0_long_sum;
  nlohmann::ordered_json rt = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rt_series.size(); ++i) {
    rt.push_back({rt_series.time[i], rt_series.value[i]});
  }
  j["rt_series"] = rt;
  return j.dump(2) + "\n";
}

std::string fit_report_json(const std::string& region,
                            const std::vector<std::pair<std::string, WaveFit>>& waves) {
  nlohmann::ordered_json j;
  j["region"] = region;
  nlohmann::ordered_json wave_reports = nlohmann::ordered_json::object();
  for (const auto& [label, fit] : waves) {
    nlohmann::ordered_json w;
    w["alpha_1"] = fit.alpha_1;
    w["beta_a"] = fit.beta_a;
    w["scale"] = fit.scale;
    w["t0_days"] = fit.t0;
    w["sse"] = fit.sse;
    nlohmann::ordered_json intervals = nlohmann::ordered_json::object();
    for (const auto& [param, interval] : fit.intervals) {
      intervals[param] = {{"lo", interval.lo},
                          {"hi", interval.hi},
                          {"lo_censored", interval.lo_censored},
                          {"hi_censored", interval.hi_censored}};
    }
    w["intervals"] = intervals;
    wave_reports[label] = w;
  }
  j["waves"] = wave_reports;
  return j.dump(2) + "\n";
}

std::string fit_curves_csv(const std::vector<Date>& dates, const std::vector<double>& observed,
                           const std::vector<double>& fitted) {
  if (dates.size() != observed.size() || dates.size() != fitted.size()) {
    throw std::invalid_argument("fit_curves_csv: column lengths differ");
  }
  std::string out = "date,observed,fitted\n";
  for (std::size_t i = 0; i < dates.size(); ++i) {
    out += dates[i].to_string() + ',' + format_g17(observed[i]) + ',' + format_g17(fitted[i]) +
           '\n';
  }
  return out;
}

}  // namespace infodemic
