#include "infodemic/timeseries.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace infodemic {

namespace {

// Days-from-civil / civil-from-days for the proleptic Gregorian calendar
// (era-based formulation; exact over the int range used here).
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                       static_cast<unsigned>(d) - 1u;
  const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

Date Date::parse(const std::string& text) {
  bool shaped = text.size() == 10 && text[4] == '-' && text[7] == '-';
  for (std::size_t i = 0; shaped && i < text.size(); ++i) {
    if (i == 4 || i == 7) continue;
    shaped = text[i] >= '0' && text[i] <= '9';
  }
  if (!shaped) throw std::invalid_argument("date: expected YYYY-MM-DD, got '" + text + "'");
  const int y = std::stoi(text.substr(0, 4));
  const int m = std::stoi(text.substr(5, 2));
  const int d = std::stoi(text.substr(8, 2));
  Date date{y, m, d};
  if (m < 1 || m > 12 || d < 1 || d > 31 || Date::from_serial(date.serial()) != date)
    throw std::invalid_argument("date: '" + text + "' is not a valid calendar date");
  return date;
}

Date Date::from_serial(std::int64_t days_since_epoch) {
  Date d;
  civil_from_days(days_since_epoch, d.year, d.month, d.day);
  return d;
}

std::int64_t Date::serial() const { return days_from_civil(year, month, day); }

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

void TimeSeries::validate() const {
  if (time.size() != value.size())
    throw std::invalid_argument("time series: index and value lengths differ");
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!std::isfinite(value[i]) || !std::isfinite(time[i]))
      throw std::invalid_argument("time series: non-finite entry at position " +
                                  std::to_string(i));
    if (i > 0 && !(time[i] > time[i - 1]))
      throw std::invalid_argument("time series: index not strictly increasing at position " +
                                  std::to_string(i));
  }
}

}  // namespace infodemic
