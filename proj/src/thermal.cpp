#include "casimir/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

double matsubara_frequency(double T, long l) {
  if (!(T > 0.0)) throw std::domain_error("matsubara_frequency: requires T > 0");
  if (l < 0) throw std::domain_error("matsubara_frequency: requires l >= 0");
  return kTwoPi * static_cast<double>(l) * T;
}

namespace {

ThermalReduction reduce_finite(const std::function<double(double)>& f,
                               const FiniteTemperature& spec, double decay_scale,
                               ZeroModeWeight default_zero_mode, double nu_floor) {
  if (!(spec.temperature > 0.0)) {
    throw std::domain_error("thermal_reduce: temperature must be > 0");
  }
  if (!(spec.rel_tol > 0.0) || spec.l_max_cap < 1) {
    throw std::domain_error("thermal_reduce: invalid tolerance or cap");
  }
  ZeroModeWeight mode = spec.zero_mode == ZeroModeWeight::Auto ? default_zero_mode
                                                               : spec.zero_mode;
  const double w0 = mode == ZeroModeWeight::Full ? 1.0
                    : mode == ZeroModeWeight::Half ? 0.5
                                                   : 0.0;
  const double T = spec.temperature;
  const double q = std::exp(-kTwoPi * T * decay_scale);

  double sum = 0.0, comp = 0.0;
  auto add = [&](double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };

  ThermalReduction out;
  if (w0 > 0.0 && nu_floor <= 0.0) {
    const double f0 = f(0.0);
    if (!std::isfinite(f0)) {
      throw ConvergenceError(
          "thermal_reduce: zero-mode term is not finite; use zero_mode=skip");
    }
    add(w0 * f0);
  }

  // First Matsubara index at or above the excluded band.
  long l_start = 1;
  if (nu_floor > 0.0) {
    l_start = static_cast<long>(std::ceil(nu_floor / (kTwoPi * T)));
    if (l_start < 1) l_start = 1;
    while (matsubara_frequency(T, l_start) < nu_floor) ++l_start;
    if (l_start > spec.l_max_cap) {
      throw ConvergenceError(
          "thermal_reduce: every Matsubara frequency up to l_max_cap lies "
          "inside the excluded band");
    }
  }

  double prev1 = 0.0, prev2 = 0.0;
  double last_ratio = 1.0;
  double tail = 0.0;
  bool converged = false;
  long l = l_start;
  long evaluated = 0;
  for (; l <= spec.l_max_cap; ++l) {
    ++evaluated;
    const double fl = f(matsubara_frequency(T, l));
    if (!std::isfinite(fl) || std::abs(fl) > 1e100) {
      throw ConvergenceError("thermal_reduce: Matsubara summand is not finite");
    }
    add(fl);
    const double afl = std::abs(fl);
    if (evaluated >= 2 && std::abs(prev1) > 0.0) last_ratio = afl / std::abs(prev1);
    if (evaluated >= 3 && afl <= std::abs(prev1) && std::abs(prev1) <= std::abs(prev2)) {
      if (afl == 0.0) {
        tail = 0.0;
        converged = true;
        break;
      }
      // Geometric tail bound with the measured term ratio as a fallback for
      // kernels whose polynomial prefactors slow the asymptotic decay.
      const double qq = std::max(q, last_ratio);
      if (qq < 1.0) {
        tail = afl * qq / (1.0 - qq);
        if (tail <= spec.rel_tol * std::max(std::abs(sum), 1e-300)) {
          converged = true;
          break;
        }
      }
    }
    prev2 = prev1;
    prev1 = fl;
  }
  if (!converged) {
    if (!(last_ratio < 1.0)) {
      throw ConvergenceError("thermal_reduce: Matsubara terms are not decaying");
    }
    out.capped = true;
    const double qq = std::max(q, last_ratio);
    tail = std::abs(prev1) * qq / (1.0 - qq);
  }
  out.value = T * sum;
  out.tail_bound = 2.0 * T * tail;  // safety margin on the geometric estimate
  out.terms = std::min(l, spec.l_max_cap);
  return out;
}

ThermalReduction reduce_zero(const std::function<double(double)>& f,
                             const ZeroTemperature& spec, double decay_scale,
                             double nu_floor) {
  if (!(spec.rel_tol > 0.0)) throw std::domain_error("thermal_reduce: invalid tolerance");
  if (!(spec.nu_min >= 0.0)) throw std::domain_error("thermal_reduce: nu_min must be >= 0");
  const double lo = std::max(spec.nu_min, nu_floor);
  QuadratureResult r = integrate_decaying_tail(f, lo, decay_scale, spec.rel_tol);
  ThermalReduction out;
  out.value = r.value / kTwoPi;
  out.tail_bound = r.error / kTwoPi;
  out.terms = r.evaluations;
  return out;
}

}  // namespace

ThermalReduction thermal_reduce(const std::function<double(double)>& f,
                                const ThermalSpec& spec, double decay_scale,
                                ZeroModeWeight default_zero_mode, double nu_floor) {
  if (const auto* ft = std::get_if<FiniteTemperature>(&spec)) {
    return reduce_finite(f, *ft, decay_scale, default_zero_mode, nu_floor);
  }
  return reduce_zero(f, std::get<ZeroTemperature>(spec), decay_scale, nu_floor);
}

}  // namespace casimir
