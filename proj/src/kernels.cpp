#include "casimir/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {

FieldKind FieldKind::scalar(int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("FieldKind: scalar dim must be 1, 2 or 3");
  FieldKind k;
  k.tag = Tag::Scalar;
  k.dim = dim;
  return k;
}

FieldKind FieldKind::em() {
  FieldKind k;
  k.tag = Tag::EM;
  k.dim = 3;
  return k;
}

FieldKind FieldKind::proca(double mass) {
  if (!(mass >= 0.0)) throw std::invalid_argument("FieldKind: Proca mass must be >= 0");
  FieldKind k;
  k.tag = Tag::Proca;
  k.dim = 3;
  k.mass = mass;
  return k;
}

double green_scalar(int dim, double nu, double r) {
  if (!(nu > 0.0) || !(r > 0.0)) {
    throw std::domain_error("green_scalar: requires nu > 0 and r > 0");
  }
  switch (dim) {
    case 1:
      return std::exp(-nu * r) / (2.0 * nu);
    case 2:
      return bessel_k0(nu * r) / kTwoPi;
    case 3:
      return std::exp(-nu * r) / (4.0 * kPi * r);
    default:
      throw std::domain_error("green_scalar: dim must be 1, 2 or 3");
  }
}

double dressed_propagator_k(double nu, double k, const SusceptibilityModel& model) {
  const double denom = k * k + nu * nu * (1.0 + eval_chi_imag(model, nu));
  if (denom == 0.0) throw SingularityError("dressed_propagator_k: vanishing denominator");
  return 1.0 / denom;
}

double em_pair_h(double kappa, double r) {
  const double r2 = r * r;
  const double r3 = r2 * r;
  const double k2 = kappa * kappa;
  const double poly = k2 * k2 / r2 + 2.0 * k2 * kappa / r3 + 5.0 * k2 / (r2 * r2) +
                      6.0 * kappa / (r2 * r3) + 3.0 / (r3 * r3);
  return std::exp(-2.0 * kappa * r) / (8.0 * kPi * kPi) * poly;
}

PairKernelValue pair_kernel(const FieldKind& kind, double nu, double r) {
  if (!(nu > 0.0) || !(r > 0.0)) {
    throw std::domain_error("pair_kernel: requires nu > 0 and r > 0");
  }
  PairKernelValue out;
  switch (kind.tag) {
    case FieldKind::Tag::Scalar: {
      const double g = green_scalar(kind.dim, nu, r);
      out.value = g * g;
      return out;
    }
    case FieldKind::Tag::EM:
      out.value = em_pair_h(nu, r);
      return out;
    case FieldKind::Tag::Proca: {
      if (nu < kind.mass) {
        out.below_mass_gap = true;
        return out;
      }
      const double zeta = std::sqrt(nu * nu - kind.mass * kind.mass);
      out.value = em_pair_h(zeta, r);
      return out;
    }
  }
  return out;
}

DyadicGreen green_dyadic(const FieldKind& kind, double nu, const Vec3& r_vec,
                         bool exclude_contact) {
  (void)exclude_contact;  // contact term vanishes pointwise for r > 0
  if (kind.tag == FieldKind::Tag::Scalar) {
    throw std::domain_error("green_dyadic: defined for EM and Proca fields");
  }
  const double r2 = r_vec[0] * r_vec[0] + r_vec[1] * r_vec[1] + r_vec[2] * r_vec[2];
  if (!(r2 > 0.0)) throw SingularityError("green_dyadic: coincident points");
  const double r = std::sqrt(r2);

  DyadicGreen out;
  double kappa = nu;
  if (kind.tag == FieldKind::Tag::Proca) {
    if (nu < kind.mass) {
      out.below_mass_gap = true;
      return out;
    }
    kappa = std::sqrt(nu * nu - kind.mass * kind.mass);
  }
  if (kappa < 0.0 || !std::isfinite(kappa)) {
    throw std::domain_error("green_dyadic: invalid decay parameter");
  }

  double diag, hat;
  if (kappa == 0.0) {
    // Static limit: only the 1/(kappa r)^2 pieces survive the kappa^2 prefactor.
    const double c = 1.0 / (4.0 * kPi * r * r2);
    diag = c;
    hat = -3.0 * c;
  } else {
    const double s = 1.0 / (kappa * r);
    const double pref = kappa * kappa * std::exp(-kappa * r) / (4.0 * kPi * r);
    diag = pref * (1.0 + s + s * s);
    hat = -pref * (1.0 + 3.0 * s + 3.0 * s * s);
  }
  const double hat_over_r2 = hat / r2;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // r_i r_j first keeps the matrix symmetric bit for bit.
      out.value[i][j] = (r_vec[i] * r_vec[j]) * hat_over_r2;
    }
    out.value[i][i] += diag;
  }
  return out;
}

}  // namespace casimir
