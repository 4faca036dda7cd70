#include "casimir/closedform.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermal.hpp"
#include "interval_terms.hpp"

namespace casimir {

SpherePairGeometry::SpherePairGeometry(double a_, double b_, double R_)
    : a(a_), b(b_), R(R_) {
  if (!(a > 0.0) || !(b > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("sphere pair: radii and distance must be > 0");
  }
  if (!(R > a + b)) throw OverlapError("sphere pair: requires R > a + b");
}

double force_1d_finite_t(double r, double r_prime, double r_dprime,
                         const SusceptibilityModel& chi1,
                         const SusceptibilityModel& chi2, double T) {
  if (!(r_prime >= 0.0) || !(r_dprime >= 0.0)) {
    throw std::domain_error("force_1d_finite_t: half-widths must be >= 0");
  }
  if (!(r > r_prime + r_dprime)) {
    throw OverlapError("force_1d_finite_t: requires r > r' + r''");
  }
  if (!(T > 0.0)) throw std::domain_error("force_1d_finite_t: requires T > 0");
  // Reconstruct interval endpoints with the first interval centered at 0.
  const double a = -r_dprime, b = r_dprime;
  const double c = r - r_prime, d = r + r_prime;
  auto summand = [&](double nu) {
    return 2.0 * eval_chi_imag(chi1, nu) * eval_chi_imag(chi2, nu) / nu *
           detail::interval_cross_exp(nu, a, b, c, d);
  };
  FiniteTemperature spec;
  spec.temperature = T;
  spec.zero_mode = ZeroModeWeight::Skip;
  spec.rel_tol = 1e-13;
  ThermalReduction red = thermal_reduce(summand, spec, 2.0 * (c - b));
  return -red.value;
}

namespace {

void check_interval_order(double a, double b, double c, double d) {
  if (!(a < b && b < c && c < d)) {
    throw std::domain_error("interval force: requires a < b < c < d");
  }
}

}  // namespace

double force_1d_zero_t(double a, double b, double c, double d, double chi1,
                       double chi2) {
  check_interval_order(a, b, c, d);
  return -chi1 * chi2 / (4.0 * kPi) *
         std::log((c - a) * (d - b) / ((c - b) * (d - a)));
}

double force_1d_zero_t_incgamma_variant(double a, double b, double c, double d,
                                        double chi1, double chi2) {
  check_interval_order(a, b, c, d);
  return -chi1 * chi2 / kTwoPi *
         (exp_integral_e1(d - a) + exp_integral_e1(c - b) -
          exp_integral_e1(d - b) - exp_integral_e1(c - a));
}

double force_1d_zero_t_quadrature(double a, double b, double c, double d,
                                  const SusceptibilityModel& chi1,
                                  const SusceptibilityModel& chi2) {
  check_interval_order(a, b, c, d);
  auto summand = [&](double nu) {
    return 2.0 * eval_chi_imag(chi1, nu) * eval_chi_imag(chi2, nu) / nu *
           detail::interval_cross_exp(nu, a, b, c, d);
  };
  ZeroTemperature spec;
  spec.rel_tol = 1e-12;
  ThermalReduction red = thermal_reduce(summand, spec, 2.0 * (c - b));
  return -red.value;
}

double energy_rings_2d(double a, double b, double R, double chi1, double chi2) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(R > 0.0)) {
    throw std::domain_error("energy_rings_2d: requires a, b >= 0 and R > 0");
  }
  const double t1 = R * R - (a - b) * (a - b);
  const double t2 = R * R - (a + b) * (a + b);
  if (!(t1 > 0.0) || !(t2 > 0.0)) {
    throw OverlapError("energy_rings_2d: rings overlap (R <= a + b)");
  }
  return -chi1 * chi2 * a * b / (8.0 * kPi) / std::sqrt(t1 * t2);
}

double energy_spheres_3d_scalar(const SpherePairGeometry& geom, double chi1,
                                double chi2, SphereLogVariant variant) {
  const double ah = geom.a_hat(), bh = geom.b_hat();
  const double num = 1.0 - (ah - bh) * (ah - bh);
  const double den = variant == SphereLogVariant::Corrected
                         ? 1.0 - (ah + bh) * (ah + bh)
                         : 1.0 + (ah + bh) * (ah + bh);
  return -chi1 * chi2 * geom.a * geom.b / (16.0 * kPi * geom.R) * std::log(num / den);
}

SeriesEval legendre_series_P(int p, double a_hat, double b_hat, int n_terms) {
  if (p > -2) throw std::domain_error("legendre_series_P: requires p <= -2");
  if (!(a_hat >= 0.0) || !(b_hat >= 0.0) || !(a_hat + b_hat < 1.0)) {
    throw std::domain_error("legendre_series_P: requires a_hat + b_hat < 1");
  }
  if (n_terms < 1) throw std::domain_error("legendre_series_P: n_terms must be >= 1");

  SeriesEval out;
  double coeff = 1.0;  // 2 Gamma(2n-p-1) / ((2n+2)! Gamma(-p-1)) at n = 0
  double sum = 0.0;
  double prev_term = 0.0;
  int settled = 0;
  for (int n = 0; n < n_terms; ++n) {
    if (n > 0) {
      const double num = (2.0 * n - p - 2.0) * (2.0 * n - p - 3.0);
      const double den = (2.0 * n + 2.0) * (2.0 * n + 1.0);
      coeff *= num / den;
    }
    // Q_n = (1/2) sum_m C(2n+2, 2m+1) a^(2(n-m)) b^(2m)
    double q;
    if (a_hat < 1e-100) {  // a_hat^2 underflow guard; the m = 0 term survives
      q = (n + 1.0) * std::pow(b_hat, 2 * n);
    } else {
      const int big_n = 2 * n + 2;
      double binom = big_n;  // C(2n+2, 1)
      double apow = 1.0;
      for (int i = 0; i < n; ++i) apow *= a_hat * a_hat;
      double bpow = 1.0;
      q = 0.0;
      for (int m = 0; m <= n; ++m) {
        q += binom * apow * bpow;
        if (m < n) {
          const int k = 2 * m + 1;
          binom *= static_cast<double>(big_n - k) * (big_n - k - 1) /
                   (static_cast<double>(k + 1) * (k + 2));
          apow /= a_hat * a_hat;
          bpow *= b_hat * b_hat;
        }
      }
      q *= 0.5;
    }
    const double term = coeff * q;
    sum += term;
    out.terms_used = n + 1;
    if (n > 0 && std::abs(term) <= 1e-14 * std::abs(sum) &&
        std::abs(term) <= std::abs(prev_term)) {
      if (++settled >= 2) {
        out.value = sum;
        out.converged = true;
        return out;
      }
    } else {
      settled = 0;
    }
    if (n > 2 && std::abs(term) > std::abs(prev_term) && std::abs(prev_term) > 0.0) {
      out.converged = false;  // terms stopped decreasing
    }
    prev_term = term;
  }
  out.value = sum;
  if (std::abs(prev_term) > 1e-12 * std::abs(sum)) out.converged = false;
  return out;
}

namespace {

// F_p over the exact evaluation basis {c t^k, c t^k ln t}. The two-sphere
// average is the alternating four-point sum of F_p at 1 +/- a_hat +/- b_hat.
struct BasisTerm {
  double c;
  int k;
  bool log;
};

std::vector<BasisTerm> differentiate(const std::vector<BasisTerm>& f) {
  std::vector<BasisTerm> out;
  for (const BasisTerm& t : f) {
    if (t.k != 0) out.push_back({t.c * t.k, t.k - 1, t.log});
    if (t.log) out.push_back({t.c, t.k - 1, false});
  }
  return out;
}

double eval_terms(const std::vector<BasisTerm>& f, double t) {
  double s = 0.0;
  const double lt = std::log(t);
  for (const BasisTerm& term : f) {
    s += term.c * std::pow(t, term.k) * (term.log ? lt : 1.0);
  }
  return s;
}

std::vector<BasisTerm> basis_for_p(int p_target) {
  // Seeded at P_{-1} = 1 (F = t^2/2) and stepped by F_{p-1} = F_p'/(1+p).
  // The p = -1 step is the 0/0 case of the power rule and resolves to the
  // logarithmic antiderivative t ln t.
  std::vector<BasisTerm> f{{0.5, 2, false}};
  for (int p = -1; p > p_target; --p) {
    if (p == -1) {
      f = {{1.0, 1, true}};
    } else {
      f = differentiate(f);
      for (BasisTerm& t : f) t.c /= (1.0 + p);
    }
  }
  return f;
}

}  // namespace

double recursion_P(int p_target, double a_hat, double b_hat) {
  if (p_target > -1) throw std::domain_error("recursion_P: requires p <= -1");
  if (!(a_hat >= 0.0) || !(b_hat >= 0.0) || !(a_hat + b_hat < 1.0)) {
    throw std::domain_error("recursion_P: requires a_hat + b_hat < 1");
  }
  if (p_target == -1) return 1.0;

  const std::vector<BasisTerm> f = basis_for_p(p_target);
  const double tol = 1e-12;
  if (a_hat < tol && b_hat < tol) return 1.0;
  if (a_hat < tol || b_hat < tol) {
    const double h = std::max(a_hat, b_hat);
    const std::vector<BasisTerm> df = differentiate(f);
    return (eval_terms(df, 1.0 + h) - eval_terms(df, 1.0 - h)) / (2.0 * h);
  }
  const double s = eval_terms(f, 1.0 + a_hat + b_hat) -
                   eval_terms(f, 1.0 + a_hat - b_hat) -
                   eval_terms(f, 1.0 - a_hat + b_hat) +
                   eval_terms(f, 1.0 - a_hat - b_hat);
  return s / (4.0 * a_hat * b_hat);
}

double p_minus6_printed(double a_hat, double b_hat) {
  const double am = a_hat - b_hat, ap = a_hat + b_hat;
  auto cube = [](double x) { return x * x * x; };
  return 1.0 / (4.0 * a_hat * b_hat) *
         (1.0 / cube(am - 1.0) - 1.0 / cube(ap - 1.0) - 1.0 / cube(am + 1.0) +
          1.0 / cube(ap + 1.0));
}

double p_minus7_printed(double a_hat, double b_hat) {
  const double a2 = a_hat * a_hat, b2 = b_hat * b_hat;
  const double diff = a2 - b2;
  const double sum = a2 + b2;
  const double base = a2 * a2 + (b2 - 1.0) * (b2 - 1.0) - 2.0 * a2 * (b2 + 1.0);
  const double den = 10.0 * base * base * base * base;
  const double n1 = -2.0 * diff * diff * diff * diff * (sum - 5.0) +
                    diff * diff * (52.0 * (sum - 44.0) - 24.0 * sum * sum);
  const double n2 = 2.0 * (5.0 - 5.0 * sum + 8.0 * sum * sum - 4.0 * sum * sum * sum);
  return (n1 + n2) / den;
}

double energy_em_spheres(const SpherePairGeometry& geom, double chi1, double chi2,
                         double temperature) {
  if (!(temperature >= 0.0)) {
    throw std::domain_error("energy_em_spheres: requires T >= 0");
  }
  const double ah = geom.a_hat(), bh = geom.b_hat();
  const double ab2 = geom.a * geom.a * geom.b * geom.b;
  const double r7 = std::pow(geom.R, 7);
  double energy = -23.0 * chi1 * chi2 * ab2 / (4.0 * kPi * r7) * recursion_P(-7, ah, bh);
  if (temperature > 0.0) {
    energy += -6.0 * temperature * chi1 * chi2 * ab2 / std::pow(geom.R, 6) *
              recursion_P(-6, ah, bh);
  }
  return energy;
}

ProcaSeries proca_smallvolume_series(double V1, double V2, double R, double chi1,
                                     double chi2, double mass, int n_terms) {
  if (!(V1 > 0.0) || !(V2 > 0.0) || !(R > 0.0)) {
    throw std::domain_error("proca_smallvolume_series: volumes and R must be > 0");
  }
  if (!(mass >= 0.0)) throw std::domain_error("proca_smallvolume_series: mass must be >= 0");
  if (n_terms < 1 || n_terms > 5) {
    throw std::domain_error("proca_smallvolume_series: n_terms must be in [1, 5]");
  }
  const double r3 = R * R * R;
  const double r4 = r3 * R, r5 = r4 * R, r6 = r5 * R, r7 = r6 * R;
  const double lr = std::log(R);
  const double m2 = mass * mass;
  const double bare[5] = {
      23.0 / (64.0 * r7),
      -mass * 3.0 / (16.0 * r6),
      m2 * 3.0 / (64.0 * r5) * (-3.0 + 2.0 * kEulerGamma + 2.0 * lr),
      mass * m2 / (48.0 * r4),
      m2 * m2 * 6.0 / r3 * (-1.0 + 4.0 * kEulerGamma + 4.0 * lr),
  };
  const double pref = -chi1 * chi2 * V1 * V2 / (kPi * kPi * kPi);

  ProcaSeries out;
  double sum = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    sum += bare[k];
    out.terms[k] = pref * bare[k];
    if (k > 0 && mass > 0.0 && std::abs(bare[k]) > std::abs(bare[k - 1])) {
      out.decreasing = false;
    }
  }
  out.value = pref * sum;
  return out;
}

}  // namespace casimir
