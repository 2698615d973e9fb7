#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace infodemic {

/// Gregorian calendar date with serial-day arithmetic (days since 1970-01-01).
struct Date {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  /// Parses "YYYY-MM-DD". Throws std::invalid_argument on malformed or
  /// non-existent dates.
  static Date parse(const std::string& text);

  static Date from_serial(std::int64_t days_since_epoch);
  std::int64_t serial() const;

  std::string to_string() const;  // "YYYY-MM-DD"

  friend bool operator==(const Date& a, const Date& b) {
    return a.year == b.year && a.month == b.month && a.day == b.day;
  }
  friend bool operator!=(const Date& a, const Date& b) { return !(a == b); }
  friend bool operator<(const Date& a, const Date& b) { return a.serial() < b.serial(); }
  friend bool operator<=(const Date& a, const Date& b) { return a.serial() <= b.serial(); }
  friend bool operator>(const Date& a, const Date& b) { return b < a; }
  friend bool operator>=(const Date& a, const Date& b) { return b <= a; }
};

/**
 * @brief Numeric time series: strictly increasing time labels (model days or
 * date serials) with one value per label.
 */
struct TimeSeries {
  std::vector<double> time;
  std::vector<double> value;

  std::size_t size() const { return value.size(); }
  bool empty() const { return value.empty(); }

  /// Throws std::invalid_argument when lengths differ, the index is not
  /// strictly increasing, or a value is non-finite.
  void validate() const;
};

}  // namespace infodemic
