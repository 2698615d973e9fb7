#include "infodemic/ingest.hpp"

#include "infodemic/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace infodemic {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_number(const std::string& text, const std::string& what, std::size_t row) {
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (text.empty() || consumed != text.size() || !std::isfinite(value)) {
    throw std::invalid_argument("row " + std::to_string(row) + ": " + what +
                                " is not a number: \"" + text + "\"");
  }
  return value;
}

void require_header(std::ifstream& in, const std::string& expected, const std::string& path) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument(path + ": file is empty");
  }
  if (strip_cr(line) != expected) {
    throw std::invalid_argument(path + ": expected header \"" + expected + "\", got \"" +
                                strip_cr(line) + "\"");
  }
}

}  // namespace

void DatedSeries::validate() const {
  if (dates.size() != values.size()) {
    throw std::invalid_argument("dated series: " + std::to_string(dates.size()) + " dates vs " +
                                std::to_string(values.size()) + " values");
  }
  for (std::size_t i = 0; i < dates.size(); ++i) {
    if (i > 0 && !(dates[i - 1] < dates[i])) {
      throw std::invalid_argument("dated series: dates not strictly increasing at " +
                                  dates[i].to_string());
    }
    if (!std::isfinite(values[i])) {
      throw std::invalid_argument("dated series: non-finite value on " + dates[i].to_string());
    }
  }
}

DatedSeries parse_cumulative_csv(const std::string& path, const std::string& region) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open case data: " + path);
  require_header(in, "date,state,fips,cases,deaths", path);

  DatedSeries series;
  std::set<std::string> available;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 5) {
      throw std::invalid_argument(path + " row " + std::to_string(row) + ": expected 5 fields "
                                  "(date,state,fips,cases,deaths), got " +
                                  std::to_string(fields.size()));
    }
    available.insert(fields[1]);
    if (fields[1] != region) continue;

    Date date;
    try {
      date = Date::parse(fields[0]);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + " row " + std::to_string(row) + ": " + e.what());
    }
    double cases = 0;
    try {
      cases = parse_number(fields[3], "cases", row);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + " " + e.what());
    }

    if (!series.dates.empty()) {
      if (series.dates.back() == date) {
        throw std::invalid_argument(path + " row " + std::to_string(row) + ": duplicate date " +
                                    date.to_string() + " for region " + region);
      }
      if (date < series.dates.back()) {
        throw std::invalid_argument(path + " row " + std::to_string(row) + ": dates for region " +
                                    region + " out of order (" + date.to_string() + " after " +
                                    series.dates.back().to_string() + ")");
      }
    }
    series.dates.push_back(date);
    series.values.push_back(cases);
  }

  if (series.empty()) {
    std::string known;
    for (const std::string& name : available) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw std::invalid_argument("region \"" + region + "\" not found in " + path +
                                " (available: " + (known.empty() ? "none" : known) + ")");
  }
  return series;
}

DatedSeries parse_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open series: " + path);
  require_header(in, "date,value", path);

  DatedSeries series;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 2) {
      throw std::invalid_argument(path + " row " + std::to_string(row) +
                                  ": expected 2 fields (date,value), got " +
                                  std::to_string(fields.size()));
    }
    Date date;
    try {
      date = Date::parse(fields[0]);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + " row " + std::to_string(row) + ": " + e.what());
    }
    double value = 0;
    try {
      value = parse_number(fields[1], "value", row);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + " " + e.what());
    }
    if (!series.dates.empty() && !(series.dates.back() < date)) {
      throw std::invalid_argument(path + " row " + std::to_string(row) +
                                  ": dates must be strictly increasing (" + date.to_string() +
                                  " after " + series.dates.back().to_string() + ")");
    }
    series.dates.push_back(date);
    series.values.push_back(value);
  }
  if (series.empty()) throw std::invalid_argument(path + ": no data rows");
  return series;
}

std::map<std::string, double> parse_population_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open population table: " + path);
  require_header(in, "region,population", path);

  std::map<std::string, double> populations;
  std::string line;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 2) {
      throw std::invalid_argument(path + " row " + std::to_string(row) +
                                  ": expected 2 fields (region,population), got " +
                                  std::to_string(fields.size()));
    }
    const std::string region = trim(fields[0]);
    if (region.empty()) {
      throw std::invalid_argument(path + " row " + std::to_string(row) + ": empty region");
    }
    double population = 0;
    try {
      population = parse_number(fields[1], "population", row);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + " " + e.what());
    }
    if (!(population > 0)) {
      throw std::invalid_argument(path + " row " + std::to_string(row) +
                                  ": population must be positive for " + region);
    }
    if (!populations.emplace(region, population).second) {
      throw std::invalid_argument(path + " row " + std::to_string(row) + ": duplicate region " +
                                  region);
    }
  }
  if (populations.empty()) throw std::invalid_argument(path + ": no data rows");
  return populations;
}

DatedSeries to_daily(const DatedSeries& cumulative) {
  cumulative.validate();
  if (cumulative.size() < 2) {
    throw std::invalid_argument("to_daily: needs at least 2 cumulative samples");
  }

  // Forward-fill onto the full calendar grid, then difference.
  const std::int64_t first = cumulative.dates.front().serial();
  const std::int64_t last = cumulative.dates.back().serial();
  std::vector<double> filled(static_cast<std::size_t>(last - first) + 1);
  std::size_t src = 0;
  for (std::int64_t day = first; day <= last; ++day) {
    if (src + 1 < cumulative.size() && cumulative.dates[src + 1].serial() == day) ++src;
    filled[static_cast<std::size_t>(day - first)] = cumulative.values[src];
  }

  DatedSeries daily;
  daily.dates.reserve(filled.size() - 1);
  daily.values.reserve(filled.size() - 1);
  for (std::size_t k = 1; k < filled.size(); ++k) {
    const Date date = Date::from_serial(first + static_cast<std::int64_t>(k));
    double diff = filled[k] - filled[k - 1];
    if (diff < 0) {
      std::cerr << "to_daily: negative daily count " << diff << " on " << date.to_string()
                << " clamped to 0 (reporting correction)\n";
      diff = 0;
    }
    daily.dates.push_back(date);
    daily.values.push_back(diff);
  }
  return daily;
}

std::vector<double> smooth_ma7(const std::vector<double>& daily) {
  std::vector<double> out(daily.size());
  double window_sum = 0;
  for (std::size_t i = 0; i < daily.size(); ++i) {
    window_sum += daily[i];
    if (i >= 7) window_sum -= daily[i - 7];
    const std::size_t window = std::min<std::size_t>(i + 1, 7);
    out[i] = window_sum / static_cast<double>(window);
  }
  return out;
}

std::vector<double> normalize_by_population(const std::vector<double>& counts,
                                            double population) {
  if (!(population > 0)) {
    throw std::invalid_argument("normalize_by_population: population must be positive");
  }
  std::vector<double> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i] / population;
  return out;
}

namespace {

/// Candidate valley filter: repeatedly drop the worst violator of the
/// valley-depth rule until every surviving valley sits at or below
/// valley_fraction of both flanking maxima.
std::vector<std::size_t> accept_valleys(const std::vector<double>& v,
                                        std::vector<std::size_t> candidates,
                                        double valley_fraction) {
  auto flank_ratio = [&](std::size_t k, const std::vector<std::size_t>& cands) {
    const std::size_t c = cands[k];
    const std::size_t left_from = k == 0 ? 0 : cands[k - 1];
    const std::size_t right_to = k + 1 == cands.size() ? v.size() - 1 : cands[k + 1];
    double left_max = 0;
    for (std::size_t j = left_from; j < c; ++j) left_max = std::max(left_max, v[j]);
    double right_max = 0;
    for (std::size_t j = c + 1; j <= right_to; ++j) right_max = std::max(right_max, v[j]);
    const double flank = std::min(left_max, right_max);
    if (flank <= 0) return v[c] > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    return v[c] / flank;
  };

  for (;;) {
    std::size_t worst = candidates.size();
    double worst_ratio = valley_fraction;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const double ratio = flank_ratio(k, candidates);
      if (ratio > worst_ratio || (worst < candidates.size() && ratio == worst_ratio)) {
        worst = k;
        worst_ratio = ratio;
      }
    }
    if (worst == candidates.size()) return candidates;
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(worst));
  }
}

}  // namespace

std::vector<WaveWindow> segment_waves(const DatedSeries& smoothed, const WaveConfig& config) {
  smoothed.validate();
  if (!(config.valley_fraction > 0 && config.valley_fraction < 1)) {
    throw std::invalid_argument("segment_waves: valley_fraction must lie in (0, 1)");
  }
  if (config.min_wave_days < 1 || config.max_waves < 1) {
    throw std::invalid_argument("segment_waves: min_wave_days and max_waves must be positive");
  }

  if (!config.explicit_bounds.empty()) {
    const std::vector<WaveWindow>& windows = config.explicit_bounds;
    for (std::size_t i = 0; i < windows.size(); ++i) {
      if (!(windows[i].start < windows[i].end)) {
        throw std::invalid_argument("wave " + windows[i].label + ": start " +
                                    windows[i].start.to_string() + " is not before end " +
                                    windows[i].end.to_string());
      }
      if (i > 0 && !(windows[i - 1].end < windows[i].start)) {
        throw std::invalid_argument("waves " + windows[i - 1].label + " and " + windows[i].label +
                                    " overlap or are out of order");
      }
      if (windows[i].start < smoothed.dates.front() || smoothed.dates.back() < windows[i].end) {
        throw std::invalid_argument("wave " + windows[i].label + " (" +
                                    windows[i].start.to_string() + ".." +
                                    windows[i].end.to_string() + ") leaves the data range " +
                                    smoothed.dates.front().to_string() + ".." +
                                    smoothed.dates.back().to_string());
      }
    }
    return windows;
  }

  const std::vector<double>& v = smoothed.values;
  const std::size_t n = v.size();
  const std::int64_t span_days =
      smoothed.dates.back().serial() - smoothed.dates.front().serial() + 1;
  if (span_days < static_cast<std::int64_t>(2) * config.min_wave_days) {
    throw std::invalid_argument("segment_waves: series spans " + std::to_string(span_days) +
                                " days, too short to segment; provide explicit wave boundaries");
  }
  if (*std::max_element(v.begin(), v.end()) <= 0) {
    throw std::invalid_argument("segment_waves: series has no positive values, no wave to "
                                "detect; provide explicit wave boundaries");
  }

  // Candidate valleys: interior local minima (first index of any plateau).
  std::vector<std::size_t> candidates;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (v[i] <= v[i - 1] && v[i] <= v[i + 1] && !(i > 1 && v[i] == v[i - 1])) {
      candidates.push_back(i);
    }
  }
  std::vector<std::size_t> boundaries = accept_valleys(v, std::move(candidates),
                                                       config.valley_fraction);

  // Merge segments shorter than min_wave_days by discarding the shallowest
  // valley adjacent to an offending segment.
  auto segment_days = [&](std::size_t from, std::size_t to) {
    return smoothed.dates[to].serial() - smoothed.dates[from].serial() + 1;
  };
  for (;;) {
    bool removed = false;
    std::size_t shallowest = boundaries.size();
    for (std::size_t k = 0; k <= boundaries.size(); ++k) {
      const std::size_t from = k == 0 ? 0 : boundaries[k - 1] + 1;
      const std::size_t to = k == boundaries.size() ? n - 1 : boundaries[k];
      if (segment_days(from, to) >= config.min_wave_days) continue;
      // Segment k is short; its bounding valleys are k-1 and k.
      for (const std::size_t b : {k == 0 ? boundaries.size() : k - 1,
                                  k == boundaries.size() ? boundaries.size() : k}) {
        if (b >= boundaries.size()) continue;
        if (shallowest == boundaries.size() || v[boundaries[b]] >= v[boundaries[shallowest]]) {
          shallowest = b;
        }
      }
    }
    if (shallowest < boundaries.size()) {
      boundaries.erase(boundaries.begin() + static_cast<std::ptrdiff_t>(shallowest));
      removed = true;
    }
    if (!removed || boundaries.empty()) break;
  }

  // Cap the wave count, keeping the deepest valleys as boundaries.
  while (boundaries.size() + 1 > config.max_waves) {
    std::size_t shallowest = 0;
    for (std::size_t k = 1; k < boundaries.size(); ++k) {
      if (v[boundaries[k]] >= v[boundaries[shallowest]]) shallowest = k;
    }
    boundaries.erase(boundaries.begin() + static_cast<std::ptrdiff_t>(shallowest));
  }

  std::vector<WaveWindow> windows;
  std::size_t from = 0;
  for (std::size_t k = 0; k <= boundaries.size(); ++k) {
    const std::size_t to = k == boundaries.size() ? n - 1 : boundaries[k];
    WaveWindow window;
    window.start = smoothed.dates[from];
    window.end = smoothed.dates[to];
    window.label = "p" + std::to_string(k + 1);
    windows.push_back(window);
    from = to + 1;
  }
  return windows;
}

std::map<std::string, std::vector<WaveWindow>> parse_wave_config(const std::string& path) {
  const Config config = Config::parse_file(path);
  std::map<std::string, std::vector<WaveWindow>> waves;

  for (const Config::Entry& entry : config.entries()) {
    if (entry.key.rfind("waves.", 0) != 0 || entry.key.size() <= 6) {
      throw std::invalid_argument(path + " line " + std::to_string(entry.line) +
                                  ": expected waves.<region> keys, got \"" + entry.key + "\"");
    }
    const std::string region = entry.key.substr(6);
    if (waves.count(region) != 0) {
      throw std::invalid_argument(path + " line " + std::to_string(entry.line) +
                                  ": duplicate region " + region);
    }

    std::vector<WaveWindow> windows;
    std::stringstream ss(entry.value);
    std::string range;
    while (std::getline(ss, range, ',')) {
      range = trim(range);
      if (range.empty()) continue;
      const auto sep = range.find("..");
      if (sep == std::string::npos) {
        throw std::invalid_argument(path + " line " + std::to_string(entry.line) +
                                    ": expected YYYY-MM-DD..YYYY-MM-DD, got \"" + range + "\"");
      }
      WaveWindow window;
      try {
        window.start = Date::parse(trim(range.substr(0, sep)));
        window.end = Date::parse(trim(range.substr(sep + 2)));
      } catch (const std::exception& e) {
        throw std::invalid_argument(path + " line " + std::to_string(entry.line) + ": " +
                                    e.what());
      }
      window.label = "p" + std::to_string(windows.size() + 1);
      if (!(window.start < window.end)) {
        throw std::invalid_argument(path + " line " + std::to_string(entry.line) + ": wave " +
                                    window.label + " of " + region + " has start >= end");
      }
      if (!windows.empty() && !(windows.back().end < window.start)) {
        throw std::invalid_argument(path + " line " + std::to_string(entry.line) + ": waves of " +
                                    region + " overlap or are out of order");
      }
      windows.push_back(window);
    }
    if (windows.empty()) {
      throw std::invalid_argument(path + " line " + std::to_string(entry.line) +
                                  ": no wave ranges for " + region);
    }
    waves.emplace(region, std::move(windows));
  }
  if (waves.empty()) {
    throw std::invalid_argument(path + ": no waves.<region> entries");
  }
  return waves;
}

RegionSeries build_region_series(const DatedSeries& cumulative, const std::string& region,
                                 double population) {
  const DatedSeries daily = to_daily(cumulative);
  RegionSeries series;
  series.region = region;
  series.population = population;
  series.dates = daily.dates;
  series.raw_daily = daily.values;
  series.smoothed = smooth_ma7(daily.values);
  series.fraction = normalize_by_population(series.smoothed, population);
  return series;
}

std::vector<double> slice_fraction(const RegionSeries& series, const WaveWindow& window) {
  if (series.dates.empty()) throw std::invalid_argument("slice_fraction: empty region series");
  const std::int64_t base = series.dates.front().serial();
  const std::int64_t i0 = window.start.serial() - base;
  const std::int64_t i1 = window.end.serial() - base;
  if (i0 < 0 || i1 >= static_cast<std::int64_t>(series.dates.size()) || i0 > i1) {
    throw std::invalid_argument("wave " + window.label + " (" + window.start.to_string() + ".." +
                                window.end.to_string() + ") leaves the data range " +
                                series.dates.front().to_string() + ".." +
                                series.dates.back().to_string());
  }
  return {series.fraction.begin() + i0, series.fraction.begin() + i1 + 1};
}

WaveWindow trim_to_positive(const RegionSeries& series, const WaveWindow& window) {
  const std::vector<double> values = slice_fraction(series, window);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 0) {
      WaveWindow trimmed = window;
      trimmed.start = Date::from_serial(window.start.serial() + static_cast<std::int64_t>(i));
      return trimmed;
    }
  }
  throw std::invalid_argument("wave " + window.label + " (" + window.start.to_string() + ".." +
                              window.end.to_string() +
                              ") has no day with positive smoothed incidence");
}

}  // namespace infodemic
