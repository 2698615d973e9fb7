#include "infodemic/sweep.hpp"

#include "infodemic/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace infodemic {

std::vector<double> AxisSpec::values() const {
  std::vector<double> v(n);
  const double step = (max - min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v[i] = min + step * static_cast<double>(i);
  }
  v[n - 1] = max;
  return v;
}

void SweepSpec::validate() const {
  auto check_axis = [](const AxisSpec& axis, const char* which) {
    if (axis.name != "alpha_1" && axis.name != "alpha_2" && axis.name != "beta_a") {
      throw std::invalid_argument(std::string("sweep: ") + which + " axis must be one of "
                                  "alpha_1, alpha_2, beta_a; got \"" + axis.name + "\"");
    }
    if (axis.n < 2) {
      throw std::invalid_argument(std::string("sweep: ") + which +
                                  " axis needs at least 2 points");
    }
    if (!(axis.min <= axis.max)) {
      throw std::invalid_argument(std::string("sweep: ") + which +
                                  " axis needs min <= max");
    }
  };
  check_axis(x, "x");
  check_axis(y, "y");
  if (x.name == y.name) {
    throw std::invalid_argument("sweep: x and y axes must differ, both are \"" + x.name + "\"");
  }
  if (!(h > 0) || n_steps == 0) {
    throw std::invalid_argument("sweep: needs h > 0 and n_steps > 0");
  }
  if (!(ui0 > 0) || !(a1s0 >= 0) || ui0 + a1s0 >= 1) {
    throw std::invalid_argument("sweep: seeds need ui0 > 0, a1s0 >= 0, ui0 + a1s0 < 1");
  }
  if (!(absorb_threshold > 0)) {
    throw std::invalid_argument("sweep: absorb_threshold must be positive");
  }
}

const SweepCell& Heatmap::at(std::size_t ix, std::size_t iy) const {
  if (ix >= x_values.size() || iy >= y_values.size()) {
    throw std::out_of_range("heatmap: cell index out of range");
  }
  return cells[iy * x_values.size() + ix];
}

namespace {

void run_cell(SweepCell& cell, const SweepSpec& spec) {
  try {
    cell.params.validate();
    const CompartmentState start = seeded_state(spec.ui0, spec.a1s0);
    const Trajectory traj = integrate(start, cell.params, spec.h, spec.n_steps);
    cell.obs = observables(traj);
    cell.absorbed = check_absorbed(traj, spec.absorb_threshold);
    if (spec.with_decomposition) {
      cell.decomposition = decomposition_at_horizon(traj);
    }
    if (spec.with_pearson) {
      cell.pearson_rho = pearson(incidence_series(traj), awareness_incidence_series(traj)).rho;
    }
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
}

}  // namespace

std::size_t resolve_thread_count() {
  if (const char* env = std::getenv("INFODEMIC_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<std::size_t>(parsed);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

Heatmap grid_sweep(const SweepSpec& spec) {
  spec.validate();

  Heatmap map;
  map.spec = spec;
  map.x_values = spec.x.values();
  map.y_values = spec.y.values();

  const std::size_t nx = map.x_values.size();
  const std::size_t ny = map.y_values.size();
  map.cells.resize(nx * ny);

  // Cell parameters are fixed up front so workers only read the spec and
  // write their own slot.
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      SweepCell& cell = map.cells[iy * nx + ix];
      cell.params = spec.base;
      set_param(cell.params, spec.x.name, map.x_values[ix]);
      set_param(cell.params, spec.y.name, map.y_values[iy]);
    }
  }

  const std::size_t n_cells = map.cells.size();
  const std::size_t n_threads = std::min(resolve_thread_count(), n_cells);
  if (n_threads <= 1) {
    for (SweepCell& cell : map.cells) run_cell(cell, spec);
    return map;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    workers.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n_cells) return;
        run_cell(map.cells[i], spec);
      }
    });
  }
  for (std::thread& w : workers) w.join();
  return map;
}

}  // namespace infodemic
