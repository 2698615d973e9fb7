#include "infodemic/reproduction.hpp"

#include "infodemic/model.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace infodemic;

namespace {

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ModelParams p;
  p.beta_i = 0.05 + 0.4 * u(rng);
  p.alpha_1 = u(rng);
  p.alpha_2 = 1.0 + 9.0 * u(rng);
  p.beta_a = 0.02 + 0.4 * u(rng);
  p.gamma_i = 0.03 + 0.2 * u(rng);
  p.gamma_a = 0.01 + 0.1 * u(rng);
  return p;
}

CompartmentState disease_free_point(std::mt19937_64& rng, bool with_a2s) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CompartmentState s;
  s.a1s = 0.3 * u(rng);
  s.a2s = with_a2s ? 0.3 * u(rng) : 0.0;
  s.us = 1.0 - s.a1s - s.a2s;
  return s;
}

}  // namespace

TEST_CASE("closed form matches the spectral radius at aware-free a2s") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelParams p = random_params(rng);
    const CompartmentState s = disease_free_point(rng, false);
    const double closed = r0_eff_closed_form(p, s);
    const double spectral = spectral_r0(ngm_matrices(p, s));
    CAPTURE(trial);
    CHECK(std::abs(closed - spectral) <= 1e-10 * std::max(1.0, std::abs(closed)));
  }
}

TEST_CASE("expanded sum equals the spectral radius for any susceptible split") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const ModelParams p = random_params(rng);
    const CompartmentState s = disease_free_point(rng, true);
    const double expanded = r0_long_sum(p, s);
    const double spectral = spectral_r0(ngm_matrices(p, s));
    CAPTURE(trial);
    CHECK(std::abs(expanded - spectral) <= 1e-10 * std::max(1.0, std::abs(expanded)));
  }
}

TEST_CASE("expanded sum reduces to the closed form when a2s is empty") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelParams p = random_params(rng);
    const CompartmentState s = disease_free_point(rng, false);
    CHECK(r0_long_sum(p, s) == doctest::Approx(r0_eff_closed_form(p, s)).epsilon(1e-14));
  }
}

TEST_CASE("new-infection matrix has identical columns, transfer columns drain at gamma_i") {
  std::mt19937_64 rng(9);
  const ModelParams p = random_params(rng);
  const CompartmentState s = disease_free_point(rng, true);
  const NgmPair ngm = ngm_matrices(p, s);

  // Infectiousness does not depend on the source's awareness state.
  for (int row = 0; row < 3; ++row) {
    CHECK(ngm.f_matrix(row, 0) == ngm.f_matrix(row, 1));
    CHECK(ngm.f_matrix(row, 0) == ngm.f_matrix(row, 2));
  }
  // Awareness transitions shuffle the infected between compartments; only
  // recovery removes them, so every column of V sums to gamma_i.
  for (int col = 0; col < 3; ++col) {
    CHECK(ngm.v_matrix.col(col).sum() == doctest::Approx(p.gamma_i).epsilon(1e-14));
  }
}

TEST_CASE("instantaneous reproduction number starts at R0 and never increases") {
  const ModelParams p;
  const Trajectory traj = integrate(seeded_state(), p, 0.5, 2000);
  const TimeSeries rt = rt_eff_series(traj, p);
  REQUIRE(rt.size() == traj.size());

  CHECK(rt.value.front() == doctest::Approx(r0_eff_closed_form(p, traj.front())).epsilon(1e-14));
  CHECK(rt.time.front() == 0.0);
  CHECK(rt.time.back() == doctest::Approx(1000.0));

  // The weighted susceptible pool (us + alpha_1*(a1s + a2s)) only drains.
  for (std::size_t i = 1; i < rt.size(); ++i) {
    CHECK(rt.value[i] <= rt.value[i - 1] + 1e-12);
  }
}

TEST_CASE("default parameters reproduce the unsuppressed reproduction number") {
  const ModelParams p;  // beta_i = 0.15, gamma_i = 1/14, alpha_1 = 0.5
  const CompartmentState s = seeded_state();
  // (0.15 * 14) * (us0 + 0.5 * 1e-6), us0 = 1 - 2e-6
  const double expected = 0.15 * 14.0 * (1.0 - 2e-6 + 0.5e-6);
  CHECK(r0_eff_closed_form(p, s) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("a fully unaware population fills only the first row of F") {
  const ModelParams p;
  CompartmentState s;
  s.us = 1.0;
  const NgmPair ngm = ngm_matrices(p, s);
  for (int col = 0; col < 3; ++col) {
    CHECK(ngm.f_matrix(0, col) == p.beta_i);
    CHECK(ngm.f_matrix(1, col) == 0.0);
    CHECK(ngm.f_matrix(2, col) == 0.0);
  }
}

TEST_CASE("full immunization empties the aware rows of F") {
  ModelParams p;
  p.alpha_1 = 0.0;
  std::mt19937_64 rng(31);
  const CompartmentState s = disease_free_point(rng, true);
  const NgmPair ngm = ngm_matrices(p, s);
  for (int col = 0; col < 3; ++col) {
    CHECK(ngm.f_matrix(1, col) == 0.0);
    CHECK(ngm.f_matrix(2, col) == 0.0);
  }
}

TEST_CASE("closed form evaluates the textbook corner cases") {
  ModelParams p;  // beta_i = 0.15, gamma_i = 1/14
  CompartmentState all_unaware;
  all_unaware.us = 1.0;
  CHECK(r0_eff_closed_form(p, all_unaware) == doctest::Approx(2.1).epsilon(1e-12));

  p.alpha_1 = 0.0;
  CompartmentState all_aware;
  all_aware.a1s = 1.0;
  CHECK(r0_eff_closed_form(p, all_aware) == 0.0);
}

TEST_CASE("zero transmission gives a zero spectral radius") {
  ModelParams p;
  p.beta_i = 0.0;
  std::mt19937_64 rng(47);
  const CompartmentState s = disease_free_point(rng, true);
  CHECK(spectral_r0(ngm_matrices(p, s)) == 0.0);
}

TEST_CASE("the instantaneous reproduction number ignores the infected awareness factor") {
  const CompartmentState start = seeded_state();
  double first = 0.0;
  for (double a2 : {1.0, 5.0, 10.0}) {
    ModelParams p;
    p.alpha_2 = a2;
    const TimeSeries rt = rt_eff_series(integrate(start, p, 0.5, 10), p);
    if (a2 == 1.0) {
      first = rt.value.front();
    } else {
      CHECK(rt.value.front() == first);
    }
  }
}
