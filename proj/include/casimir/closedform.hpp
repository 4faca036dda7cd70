#pragma once

#include <array>

#include "casimir/susceptibility.hpp"

namespace casimir {

// Two non-overlapping spheres of radii a and b with center distance R.
struct SpherePairGeometry {
  double a = 0.0, b = 0.0, R = 1.0;

  SpherePairGeometry(double a, double b, double R);

  double a_hat() const { return a / R; }
  double b_hat() const { return b / R; }
};

// Finite-temperature force between two intervals (attraction negative):
// -kB T sum_{l>=1} (2 chi1 chi2 / nu_l) exp(-2 nu_l r) sinh(2 nu_l r')
//  sinh(2 nu_l r''),
// with r the center distance and 2r'', 2r' the interval widths.
double force_1d_finite_t(double r, double r_prime, double r_dprime,
                         const SusceptibilityModel& chi1,
                         const SusceptibilityModel& chi2, double T);

// Zero-temperature limit of the interval force for dispersionless media,
// -(chi1 chi2 / 4 pi) ln[ (c-a)(d-b) / ((c-b)(d-a)) ].
// This is the exact frequency integral of the finite-T summand.
double force_1d_zero_t(double a, double b, double c, double d, double chi1,
                       double chi2);

// Incomplete-gamma rendition of the zero-T interval force with bare length
// arguments. Kept for diagnostics: it corresponds to cutting the frequency
// integral at nu = 1/2 and carries twice the prefactor of the exact limit.
double force_1d_zero_t_incgamma_variant(double a, double b, double c, double d,
                                        double chi1, double chi2);

// Zero-temperature interval force for general susceptibility models by
// direct frequency quadrature of the finite-temperature summand.
double force_1d_zero_t_quadrature(double a, double b, double c, double d,
                                  const SusceptibilityModel& chi1,
                                  const SusceptibilityModel& chi2);

// Two concentric-ring shells in the plane, zero temperature:
// -chi1 chi2 a b / (8 pi) / sqrt((R^2-(a-b)^2)(R^2-(a+b)^2)).
double energy_rings_2d(double a, double b, double R, double chi1, double chi2);

// Scalar-field sphere shells at zero temperature. Corrected uses
// ln[(1-(a-b)^2/R^2)/(1-(a+b)^2/R^2)]; PrintedPlus keeps the
// 1+(a+b)^2/R^2 denominator variant for comparison.
enum class SphereLogVariant { Corrected, PrintedPlus };
double energy_spheres_3d_scalar(const SpherePairGeometry& geom, double chi1,
                                double chi2,
                                SphereLogVariant variant = SphereLogVariant::Corrected);

// P_p(a_hat, b_hat): dimensionless two-sphere angular average of
// (|x-x'|/R)^p, by its infinite series (p <= -2, a_hat + b_hat < 1).
struct SeriesEval {
  double value = 0.0;
  bool converged = true;
  int terms_used = 0;
};
SeriesEval legendre_series_P(int p, double a_hat, double b_hat, int n_terms);

// Same quantity by the downward derivative recursion seeded at P_{-1} = 1,
// carried out symbolically over the exact {t^k, t^k ln t} basis.
double recursion_P(int p_target, double a_hat, double b_hat);

// Printed closed forms of P_-6 and P_-7, kept verbatim for the discrepancy
// report (they do not match the recursion/series/quadrature routes).
double p_minus6_printed(double a_hat, double b_hat);
double p_minus7_printed(double a_hat, double b_hat);

// Electromagnetic sphere shells: zero-temperature energy
// -23 chi1 chi2 a^2 b^2 P_-7 / (4 pi R^7), plus the printed first
// finite-temperature correction -6 kB T chi1 chi2 a^2 b^2 P_-6 / R^6.
double energy_em_spheres(const SpherePairGeometry& geom, double chi1,
                         double chi2, double temperature);

// Small-volume Proca interaction as the printed mass expansion in mR.
struct ProcaSeries {
  double value = 0.0;
  std::array<double, 5> terms{};  // summed term values, most to least dominant
  bool decreasing = true;         // magnitudes still decreasing at truncation
};
ProcaSeries proca_smallvolume_series(double V1, double V2, double R,
                                     double chi1, double chi2, double mass,
                                     int n_terms);

}  // namespace casimir
