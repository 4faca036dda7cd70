#pragma once

namespace casimir {

// Medium susceptibility model, evaluated on the imaginary frequency axis
// where it is real, non-negative and non-increasing. The Lorentz oscillator
// is the minimal causal model with those properties; Constant is its
// dispersionless limit.
struct SusceptibilityModel {
  enum class Kind { Constant, Lorentz };

  Kind kind = Kind::Constant;
  double chi0 = 0.0;    // static susceptibility, >= 0
  double omega0 = 1.0;  // oscillator frequency, > 0 (Lorentz only)
  double gamma = 0.0;   // damping rate, >= 0 (Lorentz only)

  static SusceptibilityModel constant(double chi0);
  static SusceptibilityModel lorentz(double chi0, double omega0, double gamma);

  bool is_constant() const { return kind == Kind::Constant; }
};

// chi(i nu) for nu >= 0. Constant -> chi0;
// Lorentz -> chi0 * omega0^2 / (omega0^2 + gamma*nu + nu^2).
double eval_chi_imag(const SusceptibilityModel& model, double nu);

// epsilon(i nu)/epsilon_0 = 1 + chi(i nu).
double dielectric_imag(const SusceptibilityModel& model, double nu);

// Squared field-medium coupling f^2(omega) = (omega/pi) Im chi(omega) at
// real frequency omega > 0. Zero for lossless media.
double coupling_squared(const SusceptibilityModel& model, double omega);

}  // namespace casimir
