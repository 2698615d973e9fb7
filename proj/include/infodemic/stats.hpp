#pragma once

#include "infodemic/timeseries.hpp"

#include <cstddef>
#include <vector>

namespace infodemic {

/// Sample Pearson correlation with a two-sided significance level.
struct PearsonResult {
  double rho = 0;
  double p_value = 1;
  std::size_t n = 0;
};

/**
 * @brief Pearson correlation of two equal-length samples (n >= 3) with the
 * two-sided p-value from the t-transform t = rho*sqrt((n-2)/(1-rho^2))
 * against Student's t with n-2 degrees of freedom.
 *
 * Throws std::invalid_argument on length mismatch, n < 3, or zero variance
 * in either input (undefined correlation).
 */
PearsonResult pearson(const std::vector<double>& a, const std::vector<double>& b);
PearsonResult pearson(const TimeSeries& a, const TimeSeries& b);

/**
 * @brief Pearson correlation per lag L in [-max_lag, +max_lag] on the
 * overlapping window; value at lag L pairs a[i] with b[i+L], so a series b
 * delayed by k days relative to a peaks at lag +k.
 *
 * Lags whose overlap is shorter than 3 points (or has zero variance) are
 * omitted from the result. Requires equal lengths > max_lag >= 0.
 */
TimeSeries cross_correlation(const TimeSeries& a, const TimeSeries& b, int max_lag);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
/// [0, 1], by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided tail probability of Student's t distribution: P(|T_dof| >= |t|).
double student_t_two_sided_p(double t, double dof);

}  // namespace infodemic
