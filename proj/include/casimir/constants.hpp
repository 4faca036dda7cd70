#pragma once

// Natural units throughout the library: hbar = c = k_B = epsilon_0 = 1.
// Lengths are dimensionless; frequencies, temperatures and field masses are
// in inverse-length units.

namespace casimir {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kEulerGamma = 0.5772156649015329;

}  // namespace casimir
