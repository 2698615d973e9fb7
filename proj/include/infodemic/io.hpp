#pragma once

#include "infodemic/fit.hpp"
#include "infodemic/ingest.hpp"
#include "infodemic/model.hpp"
#include "infodemic/sweep.hpp"
#include "infodemic/timeseries.hpp"

#include <string>
#include <vector>

namespace infodemic {

/// Doubles rendered with 17 significant digits ("%.17g"): round-trip exact,
/// so re-running a command reproduces files byte for byte.
std::string format_g17(double v);

/// Writes via a temporary file in the same directory plus rename, so readers
/// never observe a half-written file. Throws std::runtime_error on failure.
void atomic_write_text(const std::string& path, const std::string& content);

/// Header: t,US,A1S,A2S,UI,A1I,A2I,UR,A1R,A2R,flux_blue,flux_green,flux_red,
/// flux_aware; one row per sample.
std::string trajectory_csv(const Trajectory& traj);

/// Header: x,y,r_star,i_m,t_m,r1_red,r2_green,r3_blue,residual_ur,
/// pearson_rho,absorbed; row-major over the grid (x fastest), absorbed as
/// 1/0, unavailable statistics as nan.
std::string heatmap_csv(const Heatmap& map);

/// JSON sidecar carrying the fully resolved SweepSpec, plus any per-cell
/// error messages.
std::string sweep_spec_json(const Heatmap& map);

/// Header: pair,rho,p_value,n. Entries that produced no estimate are
/// omitted; callers surface their `error` messages separately.
std::string correlation_csv(const std::vector<CorrelationEntry>& entries);

/// Header: lag_days,rho from a cross-correlation series (time = lag).
std::string cross_correlation_csv(const TimeSeries& lags);

/// Header: date,raw_daily,smoothed,fraction; one row per day.
std::string clean_series_csv(const RegionSeries& series);

/// Header: region,alpha1_p1,...,beta_a_p3,ranking,d_alpha_1,d_beta_a plus
/// extra columns; missing values are empty fields.
std::string param_table_csv(const ParamTable& table);

/// JSON report: {r0_eff, spectral_r0, r0_long_sum, rt_series}; rt_series as
/// [t, value] pairs.
std::string ngm_json(double r0_eff, double spectral_r0, double r0_long_sum,
                     const TimeSeries& rt_series);

/// JSON report of one region's wave fits: point estimates, nuisance values,
/// objective, and profile intervals per wave label.
std::string fit_report_json(const std::string& region,
                            const std::vector<std::pair<std::string, WaveFit>>& waves);

/// Header: date,observed,fitted; the model-vs-data overlay for one wave.
std::string fit_curves_csv(const std::vector<Date>& dates, const std::vector<double>& observed,
                           const std::vector<double>& fitted);

}  // namespace infodemic
