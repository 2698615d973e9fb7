#pragma once

#include "infodemic/timeseries.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace infodemic {

/// Date-indexed series of real values; the empirical-data counterpart of the
/// day-number TimeSeries.
struct DatedSeries {
  std::vector<Date> dates;
  std::vector<double> values;

  std::size_t size() const { return dates.size(); }
  bool empty() const { return dates.empty(); }

  /// Strictly increasing dates, finite values, matching lengths.
  void validate() const;
};

/**
 * @brief Cumulative case counts for one region from a `date,state,fips,
 * cases,deaths` CSV, date-ordered.
 *
 * Errors carry the row number for malformed rows, the offending date for
 * duplicates and out-of-order rows, and the available region list when the
 * requested region is absent.
 */
DatedSeries parse_cumulative_csv(const std::string& path, const std::string& region);

/// Generic `date,value` CSV, strictly increasing dates required.
DatedSeries parse_series_csv(const std::string& path);

/// `region,population` CSV; duplicate regions and non-positive populations
/// are errors.
std::map<std::string, double> parse_population_csv(const std::string& path);

/**
 * @brief Daily new counts from a cumulative series: calendar gaps are
 * forward-filled before differencing, so a gap day reports 0 and the next
 * observed day the full difference.
 *
 * The first day is consumed by differencing; output starts one day after the
 * input. Negative differences (reporting corrections) clamp to 0 with a
 * warning on stderr. Requires length >= 2.
 */
DatedSeries to_daily(const DatedSeries& cumulative);

/// Trailing 7-day moving average; the window shrinks at the head so the
/// output has the input's length (out[i] = mean of the last <= 7 values).
std::vector<double> smooth_ma7(const std::vector<double>& daily);

/// Element-wise division by a positive population, counts to fractions.
std::vector<double> normalize_by_population(const std::vector<double>& counts, double population);

/// One fitting window of a region's series, labeled p1, p2, ...
struct WaveWindow {
  Date start;
  Date end;
  std::string label;
};

/// Wave-segmentation tuning; explicit_bounds switches automatic detection off.
struct WaveConfig {
  double valley_fraction = 0.5;
  int min_wave_days = 30;
  std::size_t max_waves = 3;
  std::vector<WaveWindow> explicit_bounds;
};

/**
 * @brief Splits a smoothed daily series into consecutive waves.
 *
 * With explicit bounds: validates them (ordered, non-overlapping, inside the
 * series' date range) and returns them as given. Automatic mode: wave
 * boundaries are local minima no higher than valley_fraction times both
 * flanking local maxima; segments shorter than min_wave_days are merged by
 * discarding the shallowest offending valley; if more than max_waves remain,
 * only the deepest valleys survive as boundaries. Windows partition the
 * series, labeled p1, p2, ... chronologically.
 *
 * Throws std::invalid_argument when the series is shorter than twice
 * min_wave_days or contains no positive value (nothing to segment); the
 * message suggests explicit boundaries.
 */
std::vector<WaveWindow> segment_waves(const DatedSeries& smoothed, const WaveConfig& config);

/**
 * @brief Wave boundaries from a config file: one `waves.<region>` key per
 * region, value a comma-separated list of `YYYY-MM-DD..YYYY-MM-DD` ranges.
 *
 * Windows are labeled p1, p2, ... in listed order and validated for order
 * and overlap.
 */
std::map<std::string, std::vector<WaveWindow>> parse_wave_config(const std::string& path);

/// Fully processed empirical series for one region, ready for fitting and
/// export: aligned daily counts, 7-day smoothing, and population fractions.
struct RegionSeries {
  std::string region;
  double population = 0;
  std::vector<Date> dates;
  std::vector<double> raw_daily;
  std::vector<double> smoothed;
  std::vector<double> fraction;
};

/// Runs the cumulative series through to_daily, smooth_ma7, and population
/// normalization.
RegionSeries build_region_series(const DatedSeries& cumulative, const std::string& region,
                                 double population);

/// Contiguous slice of a region's fraction series covered by the window
/// (inclusive); errors if the window leaves the region's date range.
std::vector<double> slice_fraction(const RegionSeries& series, const WaveWindow& window);

/// Same window with the start advanced to the first day whose smoothed
/// fraction is positive (the fitter seeds the model from that value). Errors
/// if the whole window is non-positive.
WaveWindow trim_to_positive(const RegionSeries& series, const WaveWindow& window);

}  // namespace infodemic
