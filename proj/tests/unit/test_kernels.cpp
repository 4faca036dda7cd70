#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/kernels.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"

using namespace casimir;

TEST_CASE("free scalar Green's functions") {
  CHECK(green_scalar(3, 2.0, 1.0) ==
        doctest::Approx(std::exp(-2.0) / (4.0 * kPi)).epsilon(1e-15));
  CHECK(green_scalar(2, 1.0, 1.0) ==
        doctest::Approx(bessel_k0(1.0) / kTwoPi).epsilon(1e-15));
  CHECK(green_scalar(1, 1.0, 50.0) < 1e-20);  // exponential decay limit
  CHECK_THROWS_AS(green_scalar(1, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(green_scalar(3, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(green_scalar(4, 1.0, 1.0), std::domain_error);
}

TEST_CASE("dressed propagator in reciprocal space") {
  const auto vac = SusceptibilityModel::constant(0.0);
  CHECK(dressed_propagator_k(0.0, 1.0, vac) == 1.0);
  CHECK(dressed_propagator_k(1.0, 1.0, vac) == doctest::Approx(0.5));
  CHECK(dressed_propagator_k(1.0, 1.0, SusceptibilityModel::constant(1.0)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(dressed_propagator_k(0.0, 0.0, vac), SingularityError);
}

TEST_CASE("pair kernels: closed forms and positivity") {
  // Scalar kernels are the squared propagators.
  for (double nu : {0.2, 1.0, 4.0}) {
    for (double r : {0.3, 1.0, 5.0}) {
      for (int dim : {1, 2, 3}) {
        const double g = green_scalar(dim, nu, r);
        CHECK(pair_kernel(FieldKind::scalar(dim), nu, r).value ==
              doctest::Approx(g * g).epsilon(1e-15));
      }
      CHECK(pair_kernel(FieldKind::em(), nu, r).value > 0.0);
    }
  }
  CHECK(pair_kernel(FieldKind::em(), 1.0, 1e3).value < 1e-300);  // r -> inf
}

TEST_CASE("pair kernels decrease in r and in nu") {
  const FieldKind kinds[] = {FieldKind::scalar(1), FieldKind::scalar(2),
                             FieldKind::scalar(3), FieldKind::em(),
                             FieldKind::proca(0.1)};
  for (const auto& kind : kinds) {
    for (double nu : {0.5, 1.0, 2.0}) {
      double prev = pair_kernel(kind, nu, 0.2).value;
      for (double r = 0.3; r < 8.0; r *= 1.3) {
        const double cur = pair_kernel(kind, nu, r).value;
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
      }
    }
    for (double r : {0.5, 1.0, 2.0}) {
      double prev = pair_kernel(kind, 0.2, r).value;
      for (double nu = 0.3; nu < 8.0; nu *= 1.3) {
        const double cur = pair_kernel(kind, nu, r).value;
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("EM kernel frequency integral") {
  // int_0^inf h(nu, r) dnu = 23 / (32 pi^2 r^7), term by term.
  for (double r : {0.7, 1.0, 1.6}) {
    auto h = [r](double nu) { return em_pair_h(nu, r); };
    const QuadratureResult q = integrate_decaying_tail(h, 0.0, 2.0 * r, 1e-13);
    const double expected = 23.0 / (32.0 * kPi * kPi * std::pow(r, 7));
    CHECK(q.value == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("Proca kernel: massless limit and mass gap") {
  for (double nu : {0.3, 1.0, 6.0}) {
    for (double r : {0.4, 1.0, 3.0}) {
      const double em = pair_kernel(FieldKind::em(), nu, r).value;
      const double pr = pair_kernel(FieldKind::proca(0.0), nu, r).value;
      CHECK(std::abs(pr / em - 1.0) < 1e-12);
    }
  }
  const PairKernelValue below = pair_kernel(FieldKind::proca(2.0), 1.0, 1.0);
  CHECK(below.below_mass_gap);
  CHECK(below.value == 0.0);
  const PairKernelValue above = pair_kernel(FieldKind::proca(2.0), 3.0, 1.0);
  CHECK_FALSE(above.below_mass_gap);
  const double zeta = std::sqrt(9.0 - 4.0);
  CHECK(above.value == doctest::Approx(em_pair_h(zeta, 1.0)).epsilon(1e-15));
}

TEST_CASE("Proca kernels converge to EM as m -> 0") {
  for (double m : {1e-2, 1e-4, 1e-6}) {
    double worst = 0.0;
    for (double nu : {0.5, 1.0, 3.0}) {
      for (double r : {0.5, 1.0, 3.0}) {
        const double em = pair_kernel(FieldKind::em(), nu, r).value;
        const double pr = pair_kernel(FieldKind::proca(m), nu, r).value;
        worst = std::max(worst, std::abs(pr / em - 1.0));
      }
    }
    CHECK(worst < 20.0 * m);  // uniform on the compact grid, linear in m^2/nu^2
  }
}

namespace {

double contract(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[j][i];
  }
  return s;
}

}  // namespace

TEST_CASE("dyadic Green's function: symmetry, covariance, contraction") {
  const FieldKind em = FieldKind::em();
  for (double nu : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    for (double r : {0.1, 0.5, 1.0, 3.0, 10.0}) {
      const Vec3 rv{0.48 * r, -0.6 * r, 0.64 * r};
      const DyadicGreen g = green_dyadic(em, nu, rv);
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) CHECK(g.value[i][j] == g.value[j][i]);
      }
      // The dyadic is even in r, so the contraction uses G(r) twice.
      const DyadicGreen gm = green_dyadic(em, nu, Vec3{-rv[0], -rv[1], -rv[2]});
      const double tr2 = contract(g.value, gm.value);
      CHECK(tr2 == doctest::Approx(em_pair_h(nu, r)).epsilon(1e-10));
    }
  }

  // Rotation covariance R G(r) R^T = G(R r) for a rotation about z.
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Vec3 r{0.3, -1.1, 0.7};
  const Vec3 rr{c * r[0] - s * r[1], s * r[0] + c * r[1], r[2]};
  const Mat3 g = green_dyadic(em, 1.3, r).value;
  const Mat3 grot = green_dyadic(em, 1.3, rr).value;
  const double rot[3][3] = {{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double lhs = 0.0;
      for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) lhs += rot[i][p] * g[p][q] * rot[j][q];
      }
      CHECK(lhs == doctest::Approx(grot[i][j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("dyadic static limit matches the zero-frequency kernel") {
  const Vec3 rv{0.6, 0.0, 0.8};
  const DyadicGreen g = green_dyadic(FieldKind::em(), 0.0, rv);
  const double tr2 = contract(g.value, g.value);
  CHECK(tr2 == doctest::Approx(em_pair_h(0.0, 1.0)).epsilon(1e-13));
  CHECK(em_pair_h(0.0, 1.0) == doctest::Approx(3.0 / (8.0 * kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("dyadic errors and flags") {
  CHECK_THROWS_AS(green_dyadic(FieldKind::em(), 1.0, Vec3{0.0, 0.0, 0.0}),
                  SingularityError);
  CHECK_THROWS_AS(green_dyadic(FieldKind::scalar(3), 1.0, Vec3{1.0, 0.0, 0.0}),
                  std::domain_error);
  const DyadicGreen below = green_dyadic(FieldKind::proca(3.0), 1.0, Vec3{1.0, 0.0, 0.0});
  CHECK(below.below_mass_gap);
}

TEST_CASE("pair_kernel domain errors") {
  CHECK_THROWS_AS(pair_kernel(FieldKind::em(), 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(pair_kernel(FieldKind::em(), 1.0, 0.0), std::domain_error);
}
