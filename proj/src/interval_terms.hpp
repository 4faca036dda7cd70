#pragma once

#include <cmath>

// Shared pieces of the two-interval formulas for [a,b] and [c,d] on the
// line (a < b < c < d). The cross term exp(-2 nu r) sinh(2 nu r')
// sinh(2 nu r'') is expanded into four decaying exponentials so it stays
// finite for large nu where sinh alone would overflow.

namespace casimir::detail {

inline double interval_cross_exp(double nu, double a, double b, double c, double d) {
  // Pairing the terms that coincide for degenerate intervals makes the
  // zero-width limits exact.
  return 0.25 * ((std::exp(-2.0 * nu * (c - b)) - std::exp(-2.0 * nu * (c - a))) +
                 (std::exp(-2.0 * nu * (d - a)) - std::exp(-2.0 * nu * (d - b))));
}

// Self term bracket (-2L + 1/nu - exp(-2 nu L)/nu), L the interval width.
inline double interval_self_bracket(double nu, double width) {
  return -2.0 * width + (1.0 - std::exp(-2.0 * nu * width)) / nu;
}

}  // namespace casimir::detail
