#pragma once

namespace casimir {

// Modified Bessel function of the second kind, order zero. x > 0,
// relative accuracy better than 1e-12 over the full range.
double bessel_k0(double x);

// Modified Bessel function of the first kind, order zero.
double bessel_i0(double x);

// Exponential integral E1(x) = Gamma(0, x) = int_x^inf exp(-t)/t dt, x > 0.
double exp_integral_e1(double x);

}  // namespace casimir
