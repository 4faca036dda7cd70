#pragma once

#include <functional>
#include <variant>

namespace casimir {

// Weight of the l = 0 Matsubara term. Auto lets the caller's per-field
// default apply (half for the 3D kernels, skip where the kernel is singular
// at nu = 0).
enum class ZeroModeWeight { Auto, Full, Half, Skip };

struct ZeroTemperature {
  double nu_min = 0.0;    // lower end of the frequency integral
  double rel_tol = 1e-10;
};

struct FiniteTemperature {
  double temperature = 1.0;  // > 0, inverse-length units
  ZeroModeWeight zero_mode = ZeroModeWeight::Auto;
  double rel_tol = 1e-10;
  long l_max_cap = 500000;
};

using ThermalSpec = std::variant<ZeroTemperature, FiniteTemperature>;

// nu_l = 2 pi l T.
double matsubara_frequency(double T, long l);

struct ThermalReduction {
  double value = 0.0;       // kB T sum_l' f(nu_l)  or  (1/2pi) int f dnu
  double tail_bound = 0.0;  // conservative truncation / quadrature error
  long terms = 0;           // Matsubara terms or integrand evaluations
  bool capped = false;      // l_max_cap reached before the tail bound was met
};

// Reduce a per-frequency summand/integrand. decay_scale is the exponential
// decay rate of f (2 * minimal body separation for the pair kernels); it
// drives the geometric tail bound at finite T and the change of variable of
// the zero-temperature integral. Frequencies below nu_floor are excluded
// as identically zero (the Proca mass gap): Matsubara terms with
// nu_l < nu_floor are skipped and the zero-temperature integral starts at
// max(nu_min, nu_floor).
ThermalReduction thermal_reduce(const std::function<double(double)>& f,
                                const ThermalSpec& spec, double decay_scale,
                                ZeroModeWeight default_zero_mode = ZeroModeWeight::Half,
                                double nu_floor = 0.0);

}  // namespace casimir
