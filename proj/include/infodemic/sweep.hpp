#pragma once

#include "infodemic/model.hpp"
#include "infodemic/observables.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace infodemic {

/// One evenly spaced sweep axis over a named model parameter.
struct AxisSpec {
  std::string name;
  double min = 0;
  double max = 1;
  std::size_t n = 2;

  /// Grid points, endpoints included; the last point is exactly `max`.
  std::vector<double> values() const;
};

/// Full description of a 2-D parameter sweep; everything needed to reproduce
/// the run byte for byte.
struct SweepSpec {
  ModelParams base;
  AxisSpec x;
  AxisSpec y;
  bool with_decomposition = true;
  /// Also compute, per cell, the zero-lag Pearson correlation between the
  /// daily infection and daily awareness incidence series.
  bool with_pearson = false;
  double h = 0.5;
  std::size_t n_steps = 2000;
  double ui0 = 1e-6;
  double a1s0 = 1e-6;
  double absorb_threshold = 1e-10;

  /// Axis names must be distinct members of {alpha_1, alpha_2, beta_a},
  /// each axis needs n >= 2 and min < max, and the integration grid must be
  /// non-degenerate. Throws std::invalid_argument otherwise.
  void validate() const;
};

/// Result of one grid cell. `error` is empty on success; a failed cell keeps
/// its message and leaves the numeric fields at their defaults.
struct SweepCell {
  ModelParams params;
  Observables obs;
  EquilibriumDecomposition decomposition;
  double pearson_rho = std::numeric_limits<double>::quiet_NaN();
  bool absorbed = false;
  std::string error;
};

/// Row-major grid of sweep results: cell (ix, iy) lives at iy * nx + ix.
struct Heatmap {
  std::vector<double> x_values;
  std::vector<double> y_values;
  std::vector<SweepCell> cells;
  SweepSpec spec;

  const SweepCell& at(std::size_t ix, std::size_t iy) const;
};

/**
 * @brief Integrates the model over every (x, y) grid point and collects
 * epidemic observables per cell.
 *
 * Cells are computed in parallel but the output layout is fixed by the grid,
 * so results are independent of the thread count. A cell whose integration
 * throws records the message in `error` instead of aborting the sweep.
 */
Heatmap grid_sweep(const SweepSpec& spec);

/// Worker count for sweeps: the INFODEMIC_THREADS environment variable when
/// set to a positive integer, otherwise std::thread::hardware_concurrency().
std::size_t resolve_thread_count();

}  // namespace infodemic
