#include "infodemic/stats.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace infodemic {

namespace {

/// Continued fraction for the incomplete beta function (Lentz's method).
/// Valid when x < (a + 1) / (a + b + 2); the caller applies the symmetry
/// transform otherwise.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 1e-16;
  const double tiny = std::numeric_limits<double>::min() / kEpsilon;

  const double qab = a + b;
  const double qap = a + 1;
  const double qam = a - 1;

  double c = 1;
  double d = 1 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1 / d;
  double h = d;

  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    // Even step.
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    h *= d * c;
    // Odd step.
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1) < kEpsilon) return h;
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge (a=" +
                           std::to_string(a) + ", b=" + std::to_string(b) +
                           ", x=" + std::to_string(x) + ")");
}

struct Moments {
  double mean_a = 0;
  double mean_b = 0;
  double var_a = 0;   // sum of squared deviations, not normalized
  double var_b = 0;
  double cov = 0;     // sum of deviation products, not normalized
};

Moments compute_moments(const double* a, const double* b, std::size_t n) {
  Moments m;
  for (std::size_t i = 0; i < n; ++i) {
    m.mean_a += a[i];
    m.mean_b += b[i];
  }
  m.mean_a /= static_cast<double>(n);
  m.mean_b /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - m.mean_a;
    const double db = b[i] - m.mean_b;
    m.var_a += da * da;
    m.var_b += db * db;
    m.cov += da * db;
  }
  return m;
}

PearsonResult pearson_raw(const double* a, const double* b, std::size_t n) {
  const Moments m = compute_moments(a, b, n);
  if (m.var_a <= 0 || m.var_b <= 0) {
    throw std::invalid_argument("pearson: an input has zero variance, correlation is undefined");
  }
  PearsonResult result;
  result.n = n;
  result.rho = m.cov / std::sqrt(m.var_a * m.var_b);
  // Guard against roundoff pushing |rho| past 1.
  if (result.rho > 1) result.rho = 1;
  if (result.rho < -1) result.rho = -1;

  const double dof = static_cast<double>(n) - 2;
  if (std::abs(result.rho) >= 1) {
    result.p_value = 0;
  } else {
    const double t = result.rho * std::sqrt(dof / (1 - result.rho * result.rho));
    result.p_value = student_t_two_sided_p(t, dof);
  }
  return result;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) {
    throw std::invalid_argument("regularized_incomplete_beta: requires a > 0 and b > 0");
  }
  if (!(x >= 0 && x <= 1)) {
    throw std::invalid_argument("regularized_incomplete_beta: requires x in [0, 1]");
  }
  if (x == 0) return 0;
  if (x == 1) return 1;

  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1) / (a + b + 2)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1 - front * beta_continued_fraction(b, a, 1 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
  if (!(dof > 0)) {
    throw std::invalid_argument("student_t_two_sided_p: requires dof > 0");
  }
  if (!std::isfinite(t)) return 0;
  const double x = dof / (dof + t * t);
  return regularized_incomplete_beta(dof / 2, 0.5, x);
}

PearsonResult pearson(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("pearson: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() < 3) {
    throw std::invalid_argument("pearson: needs at least 3 points, got " +
                                std::to_string(a.size()));
  }
  return pearson_raw(a.data(), b.data(), a.size());
}

PearsonResult pearson(const TimeSeries& a, const TimeSeries& b) {
  return pearson(a.value, b.value);
}

TimeSeries cross_correlation(const TimeSeries& a, const TimeSeries& b, int max_lag) {
  if (max_lag < 0) {
    throw std::invalid_argument("cross_correlation: max_lag must be non-negative");
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("cross_correlation: length mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  const std::size_t n = a.size();
  if (n <= static_cast<std::size_t>(max_lag)) {
    throw std::invalid_argument("cross_correlation: series length " + std::to_string(n) +
                                " must exceed max_lag " + std::to_string(max_lag));
  }

  TimeSeries out;
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    const std::size_t overlap = n - static_cast<std::size_t>(std::abs(lag));
    if (overlap < 3) continue;
    // Value at lag L pairs a[i] with b[i + L].
    const double* pa = a.value.data() + (lag < 0 ? -lag : 0);
    const double* pb = b.value.data() + (lag > 0 ? lag : 0);
    const Moments m = compute_moments(pa, pb, overlap);
    if (m.var_a <= 0 || m.var_b <= 0) continue;
    double rho = m.cov / std::sqrt(m.var_a * m.var_b);
    if (rho > 1) rho = 1;
    if (rho < -1) rho = -1;
    out.time.push_back(static_cast<double>(lag));
    out.value.push_back(rho);
  }
  return out;
}

}  // namespace infodemic
