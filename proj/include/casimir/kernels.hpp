#pragma once

#include <array>

#include "casimir/susceptibility.hpp"

namespace casimir {

// Which fluctuating field mediates the interaction.
struct FieldKind {
  enum class Tag { Scalar, EM, Proca };

  Tag tag = Tag::Scalar;
  int dim = 3;        // spatial dimension (1, 2 or 3 for Scalar; 3 otherwise)
  double mass = 0.0;  // Proca field mass, >= 0 (inverse length)

  static FieldKind scalar(int dim);
  static FieldKind em();
  static FieldKind proca(double mass);

  int spatial_dim() const { return dim; }
  bool is_dyadic() const { return tag != Tag::Scalar; }
};

// Per-frequency, per-unit-chi1*chi2 pair integrand K(nu, r). The first-order
// interaction energy is -kB T sum_l' over chi1 chi2 K(nu_l, |x-x'|) dmu dmu'.
struct PairKernelValue {
  double value = 0.0;
  bool below_mass_gap = false;  // Proca with nu < mass: value not computed
};

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

struct DyadicGreen {
  Mat3 value{};
  bool below_mass_gap = false;
};

// Free scalar Green's function on the imaginary axis.
// dim 1: exp(-nu r)/(2 nu); dim 2: K0(nu r)/(2 pi); dim 3: exp(-nu r)/(4 pi r).
double green_scalar(int dim, double nu, double r);

// Dressed scalar propagator in reciprocal space,
// 1 / (k^2 + nu^2 (1 + chi(i nu))).
double dressed_propagator_k(double nu, double k, const SusceptibilityModel& model);

// Electromagnetic pair kernel h with decay parameter kappa (= nu for EM,
// = zeta for Proca):
// h = exp(-2 kappa r)/(8 pi^2) [k^4/r^2 + 2k^3/r^3 + 5k^2/r^4 + 6k/r^5 + 3/r^6].
double em_pair_h(double kappa, double r);

PairKernelValue pair_kernel(const FieldKind& kind, double nu, double r);

// Transverse dyadic Green's function for EM/Proca at separation r_vec.
// The delta-function contact term is omitted when exclude_contact is set;
// away from r = 0 it vanishes pointwise, so the flag only matters for
// coincident points (which raise SingularityError regardless).
DyadicGreen green_dyadic(const FieldKind& kind, double nu, const Vec3& r_vec,
                         bool exclude_contact = true);

}  // namespace casimir
