#pragma once

#include <map>
#include <string>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

struct EnergyResult {
  double energy = 0.0;        // natural units
  double quad_error = 0.0;    // body-discretization error estimate
  double thermal_tail = 0.0;  // Matsubara truncation / frequency-quadrature bound
  std::map<std::string, double> diagnostics;  // node counts, l_max, flags
};

// First-order (chi1 chi2 cross term only) interaction energy of two
// non-overlapping bodies. Negative for positive susceptibilities.
EnergyResult pair_energy(const Body& body_a, const Body& body_b,
                         const FieldKind& kind, const ThermalSpec& thermal,
                         const QuadratureSpec& quad);

// Two homogeneous intervals [a,b] and [c,d] on the line, self energies
// included. The susceptibility-squared self terms are summed as printed;
// for dispersionless media they grow logarithmically with the Matsubara
// cutoff and come back flagged as capped.
EnergyResult energy_1d_intervals(double a, double b, double c, double d,
                                 const SusceptibilityModel& chi1,
                                 const SusceptibilityModel& chi2,
                                 const ThermalSpec& thermal);

// Trace of (G0 X)^n on the discretized bodies, per order n = 1..n_max.
// energy holds the interaction part (all-body trace minus the single-body
// traces); diagnostics["raw_term"] keeps the unsubtracted term.
std::vector<EnergyResult> series_energy(const std::vector<Body>& bodies,
                                        int n_max, const FieldKind& kind,
                                        const ThermalSpec& thermal,
                                        const QuadratureSpec& quad);

// Resummed interaction energy
//   kB T sum_l [ln det(I + G0 X) - sum_bodies ln det(I + G0 X)_single].
EnergyResult logdet_energy(const std::vector<Body>& bodies,
                           const FieldKind& kind, const ThermalSpec& thermal,
                           const QuadratureSpec& quad);

struct TwoBodyScene {
  Body body_a;
  Body body_b;
  FieldKind kind;
  ThermalSpec thermal;
  QuadratureSpec quad;
};

// Energy of the scene with body B recentered at distance separation from
// body A along their original line of centers.
EnergyResult scene_energy(const TwoBodyScene& scene, double separation);

// Force along increasing separation; negative values mean attraction.
// Interval pairs at finite temperature use the analytic Matsubara sum, all
// other configurations a central difference -(E(R+dR) - E(R-dR))/(2 dR),
// optionally Richardson-extrapolated in dR.
double force(const TwoBodyScene& scene, double separation, double d_separation,
             bool richardson = false);

}  // namespace casimir
