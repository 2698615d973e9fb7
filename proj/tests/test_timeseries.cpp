#include "infodemic/timeseries.hpp"

#include "doctest.h"

#include <limits>
#include <stdexcept>

using namespace infodemic;

TEST_CASE("date parsing round-trips through to_string") {
  for (const char* text : {"1970-01-01", "2020-02-29", "2021-12-31", "1999-03-07", "2400-02-29"}) {
    const Date d = Date::parse(text);
    CHECK(d.to_string() == text);
  }
}

TEST_CASE("date parsing rejects malformed and impossible dates") {
  for (const char* text : {"2021-13-01", "2021-00-10", "2021-02-29", "2100-02-29", "2021-04-31",
                           "2021-1-01", "2021-01-1", "21-01-01", "2021/01/01", "2021-01-01x",
                           "", "not-a-date", "2021-01-00", "2021-01-32"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(Date::parse(text), std::invalid_argument);
  }
}

TEST_CASE("serial numbers anchor at the unix epoch") {
  CHECK(Date::parse("1970-01-01").serial() == 0);
  CHECK(Date::parse("1970-01-02").serial() == 1);
  CHECK(Date::parse("1969-12-31").serial() == -1);
  CHECK(Date::parse("2000-03-01").serial() == 11017);
  CHECK(Date::parse("2020-03-15").serial() == 18336);
}

TEST_CASE("serial round trip is the identity over a long span") {
  // Covers leap years, century rules, and year boundaries.
  for (std::int64_t serial = -400; serial <= 40000; serial += 7) {
    const Date d = Date::from_serial(serial);
    CHECK(d.serial() == serial);
    CHECK(Date::parse(d.to_string()) == d);
  }
}

TEST_CASE("consecutive days differ by one serial across tricky boundaries") {
  for (const char* pair : {"2020-02-28", "2020-12-31", "2021-02-28", "2000-02-28", "1900-02-28"}) {
    const Date d = Date::parse(pair);
    const Date next = Date::from_serial(d.serial() + 1);
    CHECK(next.serial() - d.serial() == 1);
    CHECK(next > d);
    CHECK(d < next);
    CHECK(d != next);
  }
  // 1900 is not a leap year; 2000 is.
  CHECK(Date::from_serial(Date::parse("1900-02-28").serial() + 1).to_string() == "1900-03-01");
  CHECK(Date::from_serial(Date::parse("2000-02-28").serial() + 1).to_string() == "2000-02-29");
}

TEST_CASE("date comparisons follow calendar order") {
  const Date a = Date::parse("2020-05-01");
  const Date b = Date::parse("2020-05-02");
  CHECK(a < b);
  CHECK(a <= b);
  CHECK(b > a);
  CHECK(b >= a);
  CHECK(a <= a);
  CHECK(a >= a);
  CHECK(a == Date::parse("2020-05-01"));
}

TEST_CASE("time series validation catches structural errors") {
  TimeSeries ok;
  ok.time = {0.0, 1.0, 2.0};
  ok.value = {5.0, 6.0, 7.0};
  CHECK_NOTHROW(ok.validate());

  TimeSeries mismatch = ok;
  mismatch.value.pop_back();
  CHECK_THROWS_AS(mismatch.validate(), std::invalid_argument);

  TimeSeries unsorted = ok;
  unsorted.time = {0.0, 2.0, 1.0};
  CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);

  TimeSeries duplicate = ok;
  duplicate.time = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(duplicate.validate(), std::invalid_argument);

  TimeSeries non_finite = ok;
  non_finite.value[1] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(non_finite.validate(), std::invalid_argument);
}
