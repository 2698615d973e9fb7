#include "infodemic/config.hpp"
#include "infodemic/fit.hpp"
#include "infodemic/ingest.hpp"
#include "infodemic/io.hpp"
#include "infodemic/model.hpp"
#include "infodemic/observables.hpp"
#include "infodemic/reproduction.hpp"
#include "infodemic/stats.hpp"
#include "infodemic/sweep.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using infodemic::Config;
using infodemic::ModelParams;
using nlohmann::ordered_json;

/// Model parameters plus integrator settings, resolved from defaults, an
/// optional config file, and --set overrides (in that order).
struct RunSettings {
  ModelParams params;
  double h = 0.5;
  std::size_t n_steps = 2000;
  double ui0 = 1e-6;
  double a1s0 = 1e-6;
  double absorb_threshold = 1e-10;
};

const std::vector<std::string> kSettingsKeys = {
    "beta_i_per_day", "alpha_1",    "alpha_2",     "beta_a_per_day",
    "gamma_i_per_day", "gamma_a_per_day", "step_days", "n_steps",
    "initial_ui",     "initial_a1s", "absorb_threshold"};

void apply_config(const Config& config, RunSettings& settings) {
  config.require_keys_in(kSettingsKeys);
  settings.params.beta_i = config.get_double("beta_i_per_day", settings.params.beta_i);
  settings.params.alpha_1 = config.get_double("alpha_1", settings.params.alpha_1);
  settings.params.alpha_2 = config.get_double("alpha_2", settings.params.alpha_2);
  settings.params.beta_a = config.get_double("beta_a_per_day", settings.params.beta_a);
  settings.params.gamma_i = config.get_double("gamma_i_per_day", settings.params.gamma_i);
  settings.params.gamma_a = config.get_double("gamma_a_per_day", settings.params.gamma_a);
  settings.h = config.get_double("step_days", settings.h);
  settings.n_steps = config.get_size("n_steps", settings.n_steps);
  settings.ui0 = config.get_double("initial_ui", settings.ui0);
  settings.a1s0 = config.get_double("initial_a1s", settings.a1s0);
  settings.absorb_threshold = config.get_double("absorb_threshold", settings.absorb_threshold);
}

RunSettings resolve_settings(const std::string& config_path,
                             const std::vector<std::string>& overrides) {
  RunSettings settings;
  if (!config_path.empty()) {
    apply_config(Config::parse_file(config_path), settings);
  }
  for (const std::string& assignment : overrides) {
    apply_config(Config::parse_string(assignment, "--set " + assignment), settings);
  }
  settings.params.validate();
  if (!(settings.h > 0) || settings.n_steps == 0) {
    throw std::invalid_argument("step_days must be positive and n_steps non-zero");
  }
  return settings;
}

ordered_json settings_json(const RunSettings& settings) {
  ordered_json j;
  j["model"] = {{"beta_i_per_day", settings.params.beta_i},
                {"alpha_1", settings.params.alpha_1},
                {"alpha_2", settings.params.alpha_2},
                {"beta_a_per_day", settings.params.beta_a},
                {"gamma_i_per_day", settings.params.gamma_i},
                {"gamma_a_per_day", settings.params.gamma_a}};
  j["integrator"] = {{"step_days", settings.h},
                     {"n_steps", settings.n_steps},
                     {"initial_ui", settings.ui0},
                     {"initial_a1s", settings.a1s0},
                     {"absorb_threshold", settings.absorb_threshold}};
  return j;
}

void write_output(const std::string& out_dir, const std::string& name,
                  const std::string& content) {
  std::filesystem::create_directories(out_dir);
  infodemic::atomic_write_text(out_dir + "/" + name, content);
}

void write_provenance(const std::string& out_dir, const ordered_json& resolved) {
  write_output(out_dir, "provenance.json", resolved.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const RunSettings& settings, const std::string& out_dir,
                 const ordered_json& provenance) {
  const infodemic::Trajectory traj =
      infodemic::integrate(infodemic::seeded_state(settings.ui0, settings.a1s0), settings.params,
                           settings.h, settings.n_steps);
  const infodemic::Observables obs = infodemic::observables(traj);
  const bool absorbed = infodemic::check_absorbed(traj, settings.absorb_threshold);

  write_output(out_dir, "trajectory.csv", infodemic::trajectory_csv(traj));
  write_provenance(out_dir, provenance);

  std::cout << "r_star=" << infodemic::format_g17(obs.r_star)
            << " i_m=" << infodemic::format_g17(obs.i_m)
            << " t_m=" << infodemic::format_g17(obs.t_m)
            << " absorbed=" << (absorbed ? "yes" : "no") << "\n"
            << "wrote " << out_dir << "/trajectory.csv\n";
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepCli {
  std::string panel;
  std::string x_param, y_param;
  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  std::size_t grid_n = 41;
  bool pearson = false;
};

infodemic::SweepSpec make_sweep_spec(const SweepCli& cli, const RunSettings& settings) {
  infodemic::SweepSpec spec;
  spec.base = settings.params;
  spec.h = settings.h;
  spec.n_steps = settings.n_steps;
  spec.ui0 = settings.ui0;
  spec.a1s0 = settings.a1s0;
  spec.absorb_threshold = settings.absorb_threshold;
  spec.with_pearson = cli.pearson;

  if (!cli.panel.empty()) {
    // Presets reproduce the published panel regimes: the two swept axes plus
    // the pinned third parameter.
    if (cli.panel == "fig2a") {
      spec.x = {"alpha_1", 0.0, 1.0, cli.grid_n};
      spec.y = {"alpha_2", 1.0, 10.0, cli.grid_n};
      spec.base.beta_a = 0.15;
    } else if (cli.panel == "fig2b") {
      spec.x = {"alpha_1", 0.0, 1.0, cli.grid_n};
      spec.y = {"beta_a", 0.02, 0.40, cli.grid_n};
      spec.base.alpha_2 = 1.0;
    } else if (cli.panel == "fig2c") {
      spec.x = {"alpha_2", 1.0, 10.0, cli.grid_n};
      spec.y = {"beta_a", 0.02, 0.40, cli.grid_n};
      spec.base.alpha_1 = 0.5;
    } else if (cli.panel == "fig6") {
      spec.x = {"alpha_1", 0.0, 1.0, cli.grid_n};
      spec.y = {"beta_a", 0.02, 0.40, cli.grid_n};
      spec.base.alpha_2 = 1.0;
      spec.with_pearson = true;
    } else {
      throw std::invalid_argument("unknown panel \"" + cli.panel +
                                  "\" (known: fig2a, fig2b, fig2c, fig6)");
    }
    return spec;
  }

  if (cli.x_param.empty() || cli.y_param.empty()) {
    throw std::invalid_argument("sweep needs either --panel or both --x-param and --y-param");
  }
  spec.x = {cli.x_param, cli.x_min, cli.x_max, cli.grid_n};
  spec.y = {cli.y_param, cli.y_min, cli.y_max, cli.grid_n};
  return spec;
}

int run_sweep(const infodemic::SweepSpec& spec, const std::string& out_dir,
              ordered_json provenance) {
  const infodemic::Heatmap map = infodemic::grid_sweep(spec);

  std::size_t absorbed = 0;
  std::size_t failed = 0;
  for (const infodemic::SweepCell& cell : map.cells) {
    absorbed += cell.absorbed ? 1 : 0;
    if (!cell.error.empty()) ++failed;
  }
  if (failed > 0) {
    std::cerr << "sweep: " << failed << " of " << map.cells.size()
              << " cells failed; see sweep_spec.json\n";
  }

  provenance["sweep"] = nlohmann::json::parse(infodemic::sweep_spec_json(map));
  write_output(out_dir, "heatmap.csv", infodemic::heatmap_csv(map));
  write_output(out_dir, "sweep_spec.json", infodemic::sweep_spec_json(map));
  write_provenance(out_dir, provenance);

  std::cout << map.x_values.size() << "x" << map.y_values.size() << " cells, " << absorbed
            << " absorbed\nwrote " << out_dir << "/heatmap.csv\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ngm

int run_ngm(const RunSettings& settings, const std::string& out_dir, ordered_json provenance) {
  const infodemic::CompartmentState start =
      infodemic::seeded_state(settings.ui0, settings.a1s0);
  const infodemic::NgmPair ngm = infodemic::ngm_matrices(settings.params, start);
  const double spectral = infodemic::spectral_r0(ngm);
  const double closed = infodemic::r0_eff_closed_form(settings.params, start);
  const double long_sum = infodemic::r0_long_sum(settings.params, start);

  const infodemic::Trajectory traj =
      infodemic::integrate(start, settings.params, settings.h, settings.n_steps);
  const infodemic::TimeSeries rt = infodemic::rt_eff_series(traj, settings.params);

  write_output(out_dir, "ngm.json", infodemic::ngm_json(closed, spectral, long_sum, rt));
  write_provenance(out_dir, provenance);

  std::cout << "r0_eff=" << infodemic::format_g17(closed)
            << " spectral_r0=" << infodemic::format_g17(spectral)
            << " r0_long_sum=" << infodemic::format_g17(long_sum) << "\nwrote " << out_dir
            << "/ngm.json\n";
  return 0;
}

// ---------------------------------------------------------------------------
// correlate

struct AlignedPair {
  std::vector<double> a;
  std::vector<double> b;
  std::size_t common = 0;
};

AlignedPair align_by_date(const infodemic::DatedSeries& a, const infodemic::DatedSeries& b) {
  AlignedPair out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.dates[i] < b.dates[j]) {
      ++i;
    } else if (b.dates[j] < a.dates[i]) {
      ++j;
    } else {
      out.a.push_back(a.values[i]);
      out.b.push_back(b.values[j]);
      ++i;
      ++j;
    }
  }
  out.common = out.a.size();
  return out;
}

int run_correlate(const std::string& path_a, const std::string& path_b,
                  const std::string& label_a, const std::string& label_b, int max_lag,
                  const std::string& out_dir, ordered_json provenance) {
  const infodemic::DatedSeries series_a = infodemic::parse_series_csv(path_a);
  const infodemic::DatedSeries series_b = infodemic::parse_series_csv(path_b);
  const AlignedPair aligned = align_by_date(series_a, series_b);
  if (aligned.common < 3) {
    throw std::invalid_argument("series share only " + std::to_string(aligned.common) +
                                " dates, need at least 3");
  }

  const infodemic::PearsonResult r = infodemic::pearson(aligned.a, aligned.b);
  infodemic::CorrelationEntry entry;
  entry.pair = label_a + "~" + label_b;
  entry.rho = r.rho;
  entry.p_value = r.p_value;
  entry.n = r.n;
  write_output(out_dir, "correlation.csv", infodemic::correlation_csv({entry}));

  if (max_lag > 0) {
    infodemic::TimeSeries ts_a;
    infodemic::TimeSeries ts_b;
    for (std::size_t k = 0; k < aligned.common; ++k) {
      ts_a.time.push_back(static_cast<double>(k));
      ts_a.value.push_back(aligned.a[k]);
      ts_b.time.push_back(static_cast<double>(k));
      ts_b.value.push_back(aligned.b[k]);
    }
    const infodemic::TimeSeries lags = infodemic::cross_correlation(ts_a, ts_b, max_lag);
    write_output(out_dir, "cross_correlation.csv", infodemic::cross_correlation_csv(lags));
  }
  write_provenance(out_dir, provenance);

  std::cout << entry.pair << ": rho=" << infodemic::format_g17(r.rho)
            << " p=" << infodemic::format_g17(r.p_value) << " n=" << r.n << "\nwrote " << out_dir
            << "/correlation.csv\n";
  return 0;
}

// ---------------------------------------------------------------------------
// ingest

std::string sanitize_filename(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  }
  return out;
}

int run_ingest(const std::string& cases_path, const std::vector<std::string>& regions,
               const std::string& population_path, const std::string& out_dir,
               ordered_json provenance) {
  const std::map<std::string, double> populations =
      infodemic::parse_population_csv(population_path);

  for (const std::string& region : regions) {
    const auto pop_it = populations.find(region);
    if (pop_it == populations.end()) {
      throw std::invalid_argument("no population for region \"" + region + "\" in " +
                                  population_path);
    }
    const infodemic::DatedSeries cumulative =
        infodemic::parse_cumulative_csv(cases_path, region);
    const infodemic::RegionSeries series =
        infodemic::build_region_series(cumulative, region, pop_it->second);
    const std::string name = "clean_" + sanitize_filename(region) + ".csv";
    write_output(out_dir, name, infodemic::clean_series_csv(series));
    std::cout << region << ": " << series.dates.size() << " days, wrote " << out_dir << "/"
              << name << "\n";
  }
  write_provenance(out_dir, provenance);
  return 0;
}

// ---------------------------------------------------------------------------
// fit

struct FitCli {
  std::string cases_path;
  std::string region;
  std::string population_path;
  std::string waves_path;
  std::string wave_label;  // empty = all
  std::vector<std::string> free = {"alpha_1", "beta_a"};
  std::string alpha1_bounds;
  std::string beta_a_bounds;
  double threshold = 0.05;
  double t0_max = 20;
  std::size_t margin_days = 40;
  std::size_t grid_points = 21;
};

infodemic::FitBounds parse_bounds(const std::string& text, const std::string& which) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) {
    throw std::invalid_argument(which + ": expected lo:hi, got \"" + text + "\"");
  }
  try {
    return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(which + ": expected numeric lo:hi, got \"" + text + "\"");
  }
}

int run_fit(const FitCli& cli, const RunSettings& settings, const std::string& out_dir,
            ordered_json provenance) {
  const std::map<std::string, double> populations =
      infodemic::parse_population_csv(cli.population_path);
  const auto pop_it = populations.find(cli.region);
  if (pop_it == populations.end()) {
    throw std::invalid_argument("no population for region \"" + cli.region + "\" in " +
                                cli.population_path);
  }
  const infodemic::DatedSeries cumulative =
      infodemic::parse_cumulative_csv(cli.cases_path, cli.region);
  const infodemic::RegionSeries series =
      infodemic::build_region_series(cumulative, cli.region, pop_it->second);

  infodemic::WaveConfig wave_config;
  if (!cli.waves_path.empty()) {
    const auto all_waves = infodemic::parse_wave_config(cli.waves_path);
    const auto it = all_waves.find(cli.region);
    if (it == all_waves.end()) {
      throw std::invalid_argument("no waves." + cli.region + " entry in " + cli.waves_path);
    }
    wave_config.explicit_bounds = it->second;
  }
  const infodemic::DatedSeries smoothed_fractions{series.dates, series.fraction};
  std::vector<infodemic::WaveWindow> windows =
      infodemic::segment_waves(smoothed_fractions, wave_config);
  if (!cli.wave_label.empty()) {
    std::vector<infodemic::WaveWindow> selected;
    for (const infodemic::WaveWindow& w : windows) {
      if (w.label == cli.wave_label) selected.push_back(w);
    }
    if (selected.empty()) {
      std::string known;
      for (const infodemic::WaveWindow& w : windows) {
        if (!known.empty()) known += ", ";
        known += w.label;
      }
      throw std::invalid_argument("no wave labeled \"" + cli.wave_label + "\" (have: " + known +
                                  ")");
    }
    windows = selected;
  }

  std::vector<std::pair<std::string, infodemic::WaveFit>> results;
  ordered_json wave_json = ordered_json::array();
  for (infodemic::WaveWindow window : windows) {
    window = infodemic::trim_to_positive(series, window);
    infodemic::FitSpec spec;
    spec.free = cli.free;
    if (!cli.alpha1_bounds.empty()) {
      spec.bounds["alpha_1"] = parse_bounds(cli.alpha1_bounds, "--alpha1-bounds");
    }
    if (!cli.beta_a_bounds.empty()) {
      spec.bounds["beta_a"] = parse_bounds(cli.beta_a_bounds, "--beta-a-bounds");
    }
    spec.fixed = settings.params;
    spec.target = infodemic::slice_fraction(series, window);
    spec.t0_max = cli.t0_max;
    spec.h = settings.h;
    spec.horizon_margin_days = cli.margin_days;
    spec.grid_points = cli.grid_points;

    infodemic::WaveFit fit = infodemic::fit_wave(spec);
    if (cli.threshold != 0.05) {
      for (const std::string& name : spec.free) {
        fit.intervals[name] = infodemic::profile_interval(spec, fit, name, cli.threshold);
      }
    }

    const std::vector<double> fitted = infodemic::fit_prediction(spec, fit);
    std::vector<infodemic::Date> dates;
    for (std::int64_t s = window.start.serial(); s <= window.end.serial(); ++s) {
      dates.push_back(infodemic::Date::from_serial(s));
    }
    write_output(out_dir, "fit_curve_" + window.label + ".csv",
                 infodemic::fit_curves_csv(dates, spec.target, fitted));

    std::cout << window.label << " (" << window.start.to_string() << ".."
              << window.end.to_string() << "): alpha_1=" << infodemic::format_g17(fit.alpha_1)
              << " beta_a=" << infodemic::format_g17(fit.beta_a)
              << " sse=" << infodemic::format_g17(fit.sse) << "\n";
    for (const auto& [param, interval] : fit.intervals) {
      std::cout << "  " << param << " in [" << infodemic::format_g17(interval.lo) << ", "
                << infodemic::format_g17(interval.hi) << "]"
                << (interval.lo_censored ? " lo-censored" : "")
                << (interval.hi_censored ? " hi-censored" : "") << "\n";
    }
    wave_json.push_back({{"label", window.label},
                         {"start", window.start.to_string()},
                         {"end", window.end.to_string()}});
    results.emplace_back(window.label, std::move(fit));
  }

  provenance["waves"] = wave_json;
  write_output(out_dir, "fit.json", infodemic::fit_report_json(cli.region, results));
  write_provenance(out_dir, provenance);
  std::cout << "wrote " << out_dir << "/fit.json\n";
  return 0;
}

// ---------------------------------------------------------------------------
// table

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto sep = item.find('~');
    if (sep == std::string::npos || sep == 0 || sep + 1 == item.size()) {
      throw std::invalid_argument("--pairs: expected colA~colB entries, got \"" + item + "\"");
    }
    pairs.emplace_back(item.substr(0, sep), item.substr(sep + 1));
  }
  if (pairs.empty()) throw std::invalid_argument("--pairs: no pairs given");
  return pairs;
}

int run_table(const std::string& table_path, const std::string& pairs_text,
              const std::string& out_dir, ordered_json provenance) {
  const infodemic::ParamTable table = infodemic::read_param_table_csv(table_path);
  const std::vector<std::pair<std::string, std::string>> pairs = parse_pairs(pairs_text);
  const std::vector<infodemic::CorrelationEntry> report =
      infodemic::correlate_table(table, pairs);

  write_output(out_dir, "param_table.csv", infodemic::param_table_csv(table));
  write_output(out_dir, "correlations.csv", infodemic::correlation_csv(report));
  write_provenance(out_dir, provenance);

  for (const infodemic::CorrelationEntry& entry : report) {
    if (entry.error.empty()) {
      std::cout << entry.pair << ": rho=" << infodemic::format_g17(entry.rho)
                << " p=" << infodemic::format_g17(entry.p_value) << " n=" << entry.n << "\n";
    } else {
      std::cerr << entry.pair << ": skipped (" << entry.error << ")\n";
    }
  }
  std::cout << "wrote " << out_dir << "/correlations.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled awareness-epidemic compartment model: simulation, parameter sweeps,\n"
               "reproduction numbers, correlation statistics, case-data ingestion, and\n"
               "per-wave parameter fitting. Set INFODEMIC_THREADS to cap sweep parallelism."};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "key=value config file (model and integrator keys)")
      ->check(CLI::ExistingFile);
  app.add_option("--set", overrides,
                 "override one config key, e.g. --set beta_a_per_day=0.2 (repeatable)");

  auto* simulate = app.add_subcommand("simulate", "Integrate one run and write trajectory.csv");
  std::string simulate_out = "out/simulate";
  simulate->add_option("--out", simulate_out, "output directory");

  auto* sweep = app.add_subcommand("sweep", "Evaluate observables over a 2-D parameter grid");
  SweepCli sweep_cli;
  std::string sweep_out = "out/sweep";
  sweep->add_option("--out", sweep_out, "output directory");
  sweep->add_option("--panel", sweep_cli.panel,
                    "axis preset: fig2a (alpha_1 x alpha_2 at beta_a=0.15), fig2b (alpha_1 x "
                    "beta_a at alpha_2=1), fig2c (alpha_2 x beta_a at alpha_1=0.5), fig6 "
                    "(fig2b plus per-cell infection/awareness correlation)");
  sweep->add_option("--x-param", sweep_cli.x_param, "x axis parameter (alpha_1|alpha_2|beta_a)");
  sweep->add_option("--x-min", sweep_cli.x_min, "x axis minimum");
  sweep->add_option("--x-max", sweep_cli.x_max, "x axis maximum");
  sweep->add_option("--y-param", sweep_cli.y_param, "y axis parameter (alpha_1|alpha_2|beta_a)");
  sweep->add_option("--y-min", sweep_cli.y_min, "y axis minimum");
  sweep->add_option("--y-max", sweep_cli.y_max, "y axis maximum");
  sweep->add_option("--grid", sweep_cli.grid_n, "points per axis (default 41)");
  sweep->add_flag("--pearson", sweep_cli.pearson,
                  "add per-cell correlation of daily infections vs daily awareness");

  auto* ngm = app.add_subcommand("ngm", "Reproduction numbers and R_t series, write ngm.json");
  std::string ngm_out = "out/ngm";
  ngm->add_option("--out", ngm_out, "output directory");

  auto* correlate =
      app.add_subcommand("correlate", "Correlate two date,value series on their common dates");
  std::string corr_a, corr_b, corr_label_a = "a", corr_label_b = "b";
  int corr_max_lag = 0;
  std::string corr_out = "out/correlate";
  correlate->add_option("--series-a", corr_a, "first date,value CSV")
      ->required()
      ->check(CLI::ExistingFile);
  correlate->add_option("--series-b", corr_b, "second date,value CSV")
      ->required()
      ->check(CLI::ExistingFile);
  correlate->add_option("--label-a", corr_label_a, "name of the first series in reports");
  correlate->add_option("--label-b", corr_label_b, "name of the second series in reports");
  correlate->add_option("--max-lag", corr_max_lag,
                        "also write cross_correlation.csv for lags -N..N days");
  correlate->add_option("--out", corr_out, "output directory");

  auto* ingest = app.add_subcommand(
      "ingest", "Clean cumulative case data into daily/smoothed/fraction series");
  std::string ingest_cases, ingest_pop;
  std::vector<std::string> ingest_regions;
  std::string ingest_out = "out/ingest";
  ingest->add_option("--cases", ingest_cases, "date,state,fips,cases,deaths CSV")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--region", ingest_regions, "region to extract (repeatable)")->required();
  ingest->add_option("--population-file", ingest_pop, "region,population CSV")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--out", ingest_out, "output directory");

  auto* fit = app.add_subcommand("fit", "Fit model parameters to one region's epidemic waves");
  FitCli fit_cli;
  std::string fit_out = "out/fit";
  fit->add_option("--cases", fit_cli.cases_path, "date,state,fips,cases,deaths CSV")
      ->required()
      ->check(CLI::ExistingFile);
  fit->add_option("--region", fit_cli.region, "region to fit")->required();
  fit->add_option("--population-file", fit_cli.population_path, "region,population CSV")
      ->required()
      ->check(CLI::ExistingFile);
  fit->add_option("--waves", fit_cli.waves_path,
                  "wave-boundary config (waves.<region> = start..end, ...); omit for "
                  "automatic segmentation")
      ->check(CLI::ExistingFile);
  fit->add_option("--wave", fit_cli.wave_label, "fit only this wave label (default: all)");
  fit->add_option("--free", fit_cli.free, "free parameters (default: alpha_1 beta_a)");
  fit->add_option("--alpha1-bounds", fit_cli.alpha1_bounds, "alpha_1 box as lo:hi");
  fit->add_option("--beta-a-bounds", fit_cli.beta_a_bounds, "beta_a box as lo:hi");
  fit->add_option("--threshold", fit_cli.threshold, "profile interval threshold (default 0.05)");
  fit->add_option("--t0-max", fit_cli.t0_max, "largest |t0| day offset (default 20)");
  fit->add_option("--margin-days", fit_cli.margin_days,
                  "integration horizon beyond the wave (default 40)");
  fit->add_option("--grid-points", fit_cli.grid_points, "coarse grid points per free parameter");
  fit->add_option("--out", fit_out, "output directory");

  auto* table = app.add_subcommand(
      "table", "Correlate parameter-table columns (Pearson rho and p per pair)");
  std::string table_path;
  std::string table_pairs = "d_beta_a~alpha1_p1,d_alpha_1~beta_a_p1,d_beta_a~ranking";
  std::string table_out = "out/table";
  table->add_option("--table", table_path, "parameter table CSV")
      ->required()
      ->check(CLI::ExistingFile);
  table->add_option("--pairs", table_pairs, "comma-separated colA~colB pairs");
  table->add_option("--out", table_out, "output directory");

  // --config and --set live on the app; fallthrough lets them also appear
  // after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const RunSettings settings = resolve_settings(config_path, overrides);
    const auto base_provenance = [&](const char* command) {
      ordered_json p;
      p["command"] = command;
      p["settings"] = settings_json(settings);
      if (!config_path.empty()) p["config_file"] = config_path;
      if (!overrides.empty()) p["overrides"] = overrides;
      return p;
    };

    if (*simulate) {
      return run_simulate(settings, simulate_out, base_provenance("simulate"));
    }
    if (*sweep) {
      ordered_json provenance = base_provenance("sweep");
      if (!sweep_cli.panel.empty()) provenance["panel"] = sweep_cli.panel;
      return run_sweep(make_sweep_spec(sweep_cli, settings), sweep_out, provenance);
    }
    if (*ngm) {
      return run_ngm(settings, ngm_out, base_provenance("ngm"));
    }
    if (*correlate) {
      ordered_json provenance = base_provenance("correlate");
      provenance["inputs"] = {{"series_a", corr_a}, {"series_b", corr_b}};
      provenance["max_lag"] = corr_max_lag;
      return run_correlate(corr_a, corr_b, corr_label_a, corr_label_b, corr_max_lag, corr_out,
                           provenance);
    }
    if (*ingest) {
      ordered_json provenance = base_provenance("ingest");
      provenance["inputs"] = {{"cases", ingest_cases}, {"population_file", ingest_pop}};
      provenance["regions"] = ingest_regions;
      return run_ingest(ingest_cases, ingest_regions, ingest_pop, ingest_out, provenance);
    }
    if (*fit) {
      ordered_json provenance = base_provenance("fit");
      provenance["inputs"] = {{"cases", fit_cli.cases_path},
                              {"population_file", fit_cli.population_path}};
      if (!fit_cli.waves_path.empty()) provenance["inputs"]["waves"] = fit_cli.waves_path;
      provenance["region"] = fit_cli.region;
      provenance["free"] = fit_cli.free;
      provenance["threshold"] = fit_cli.threshold;
      return run_fit(fit_cli, settings, fit_out, provenance);
    }
    if (*table) {
      ordered_json provenance = base_provenance("table");
      provenance["inputs"] = {{"table", table_path}};
      provenance["pairs"] = table_pairs;
      return run_table(table_path, table_pairs, table_out, provenance);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
