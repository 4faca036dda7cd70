#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/thermal.hpp"

using namespace casimir;

TEST_CASE("matsubara frequencies") {
  CHECK(matsubara_frequency(1.0, 0) == 0.0);
  CHECK(matsubara_frequency(1.0, 2) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(matsubara_frequency(0.5, 3) == doctest::Approx(3.0 * kPi).epsilon(1e-15));
  CHECK_THROWS_AS(matsubara_frequency(0.0, 1), std::domain_error);
  CHECK_THROWS_AS(matsubara_frequency(1.0, -1), std::domain_error);
}

TEST_CASE("zero-temperature reduction of a decaying exponential") {
  auto f = [](double nu) { return std::exp(-2.0 * nu); };
  const ThermalReduction r = thermal_reduce(f, ZeroTemperature{}, 2.0);
  CHECK(r.value == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-12));
  CHECK(r.tail_bound >= 0.0);
}

TEST_CASE("finite-temperature geometric sum with half zero mode") {
  auto f = [](double nu) { return std::exp(-2.0 * nu); };
  FiniteTemperature spec;
  spec.temperature = 1.0;
  spec.rel_tol = 1e-14;
  const ThermalReduction r = thermal_reduce(f, spec, 2.0, ZeroModeWeight::Half);
  const double q = std::exp(-4.0 * kPi);
  CHECK(r.value == doctest::Approx(0.5 + q / (1.0 - q)).epsilon(1e-13));
}

TEST_CASE("half-weight sum reproduces the coth closed form") {
  const double T = 0.3, r = 1.7;
  auto f = [r](double nu) { return std::exp(-2.0 * nu * r); };
  FiniteTemperature spec;
  spec.temperature = T;
  spec.rel_tol = 1e-14;
  const ThermalReduction red = thermal_reduce(f, spec, 2.0 * r, ZeroModeWeight::Half);
  CHECK(red.value ==
        doctest::Approx(0.5 * T / std::tanh(kTwoPi * T * r)).epsilon(1e-12));
}

TEST_CASE("zero summand reduces to (0, 0)") {
  auto f = [](double) { return 0.0; };
  FiniteTemperature spec;
  spec.temperature = 1.0;
  const ThermalReduction r = thermal_reduce(f, spec, 1.0);
  CHECK(r.value == 0.0);
  CHECK(r.tail_bound == 0.0);
  const ThermalReduction z = thermal_reduce(f, ZeroTemperature{}, 1.0);
  CHECK(z.value == 0.0);
}

TEST_CASE("tail bound is conservative under tolerance refinement") {
  // EM-like summand: polynomial growth before the exponential takes over.
  auto f = [](double nu) { return (1.0 + nu * nu * nu * nu) * std::exp(-2.0 * nu); };
  FiniteTemperature coarse;
  coarse.temperature = 0.25;
  coarse.rel_tol = 1e-6;
  FiniteTemperature fine = coarse;
  fine.rel_tol = 1e-7;
  const ThermalReduction rc = thermal_reduce(f, coarse, 2.0);
  const ThermalReduction rf = thermal_reduce(f, fine, 2.0);
  CHECK(std::abs(rf.value - rc.value) <= rc.tail_bound);

  ZeroTemperature zc;
  zc.rel_tol = 1e-6;
  ZeroTemperature zf;
  zf.rel_tol = 1e-7;
  const ThermalReduction qc = thermal_reduce(f, zc, 2.0);
  const ThermalReduction qf = thermal_reduce(f, zf, 2.0);
  CHECK(std::abs(qf.value - qc.value) <= qc.tail_bound);
}

TEST_CASE("l_max cap flags a slowly converging sum") {
  auto f = [](double nu) { return 1.0 / (nu * nu); };  // decays, sum converges slowly
  FiniteTemperature spec;
  spec.temperature = 1.0;
  spec.rel_tol = 1e-14;
  spec.l_max_cap = 10;
  const ThermalReduction r = thermal_reduce(f, spec, 1e-9, ZeroModeWeight::Skip);
  CHECK(r.capped);
  CHECK(r.terms == 10);
}

TEST_CASE("non-decaying summands raise convergence errors") {
  FiniteTemperature spec;
  spec.temperature = 1.0;
  spec.l_max_cap = 50;
  auto flat = [](double) { return 1.0; };
  CHECK_THROWS_AS(thermal_reduce(flat, spec, 1.0, ZeroModeWeight::Skip),
                  ConvergenceError);
  auto diverging = [](double nu) { return std::exp(0.05 * nu); };
  CHECK_THROWS_AS(thermal_reduce(diverging, spec, 1.0, ZeroModeWeight::Skip),
                  ConvergenceError);
  auto singular_zero_mode = [](double nu) {
    return nu == 0.0 ? std::numeric_limits<double>::infinity() : std::exp(-nu);
  };
  CHECK_THROWS_AS(thermal_reduce(singular_zero_mode, spec, 1.0, ZeroModeWeight::Half),
                  ConvergenceError);
  // Too-slow decay at zero temperature exhausts the panel budget.
  auto slow = [](double nu) { return 1.0 / (1.0 + nu); };
  CHECK_THROWS_AS(thermal_reduce(slow, ZeroTemperature{}, 1.0), ConvergenceError);
}

TEST_CASE("explicit zero-mode weights") {
  auto f = [](double nu) { return std::exp(-nu); };
  FiniteTemperature spec;
  spec.temperature = 1.0;
  spec.rel_tol = 1e-14;
  spec.zero_mode = ZeroModeWeight::Full;
  const double full = thermal_reduce(f, spec, 1.0).value;
  spec.zero_mode = ZeroModeWeight::Half;
  const double half = thermal_reduce(f, spec, 1.0).value;
  spec.zero_mode = ZeroModeWeight::Skip;
  const double skip = thermal_reduce(f, spec, 1.0).value;
  CHECK(full - half == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half - skip == doctest::Approx(0.5).epsilon(1e-14));
  // Auto resolves to the caller-provided default.
  spec.zero_mode = ZeroModeWeight::Auto;
  CHECK(thermal_reduce(f, spec, 1.0, ZeroModeWeight::Skip).value == skip);
}
