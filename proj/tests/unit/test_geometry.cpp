#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

double weight_sum(const NodeSet& ns) {
  double s = 0.0;
  for (double w : ns.weights) s += w;
  return s;
}

Body with_chi(BodyShape shape) {
  return Body{std::move(shape), SusceptibilityModel::constant(1.0)};
}

}  // namespace

TEST_CASE("quadrature measures are exact for f = 1") {
  QuadratureSpec spec;
  spec.angular_order = 16;
  spec.radial_order = 6;
  CHECK(weight_sum(quadrature_nodes(with_chi(RingShell{2.0, {0.3, -1.0}}), spec)) ==
        doctest::Approx(2.0 * kTwoPi).epsilon(1e-14));
  CHECK(weight_sum(quadrature_nodes(with_chi(SphereShell{1.0, {0, 0, 0}}), spec)) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK(weight_sum(quadrature_nodes(with_chi(Ball{1.5, {0, 0, 0}}), spec)) ==
        doctest::Approx(4.0 / 3.0 * kPi * std::pow(1.5, 3)).epsilon(1e-13));
  CHECK(weight_sum(quadrature_nodes(with_chi(Interval{-1.0, 3.0}), spec)) ==
        doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("sphere shell second moment is exact at low order") {
  QuadratureSpec spec;
  spec.angular_order = 4;
  spec.radial_order = 2;
  const NodeSet ns = quadrature_nodes(with_chi(SphereShell{1.0, {0, 0, 0}}), spec);
  double zz = 0.0;
  for (std::size_t i = 0; i < ns.nodes.size(); ++i) {
    zz += ns.weights[i] * ns.nodes[i][2] * ns.nodes[i][2];
  }
  CHECK(zz == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
}

TEST_CASE("shell rules integrate trigonometric polynomials exactly") {
  QuadratureSpec spec;
  spec.angular_order = 12;
  spec.radial_order = 6;
  const NodeSet ring = quadrature_nodes(with_chi(RingShell{1.0, {0.0, 0.0}}), spec);
  for (int k = 1; k < 12; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < ring.nodes.size(); ++i) {
      const double th = std::atan2(ring.nodes[i][1], ring.nodes[i][0]);
      s += ring.weights[i] * std::cos(k * th);
    }
    CHECK(std::abs(s) < 1e-12);
  }
  const NodeSet sph = quadrature_nodes(with_chi(SphereShell{1.0, {0, 0, 0}}), spec);
  double y20 = 0.0, c2phi = 0.0;
  for (std::size_t i = 0; i < sph.nodes.size(); ++i) {
    const double z = sph.nodes[i][2];
    y20 += sph.weights[i] * (3.0 * z * z - 1.0);
    const double phi = std::atan2(sph.nodes[i][1], sph.nodes[i][0]);
    c2phi += sph.weights[i] * (1.0 - z * z) * std::cos(2.0 * phi);
  }
  CHECK(std::abs(y20) < 1e-12);
  CHECK(std::abs(c2phi) < 1e-12);
}

TEST_CASE("interval Gauss-Legendre is polynomially exact") {
  QuadratureSpec spec;
  spec.radial_order = 3;
  const NodeSet ns = quadrature_nodes(with_chi(Interval{0.0, 1.0}), spec);
  double s3 = 0.0;
  for (std::size_t i = 0; i < ns.nodes.size(); ++i) {
    s3 += ns.weights[i] * std::pow(ns.nodes[i][0], 3);
  }
  CHECK(s3 == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("ball Monte Carlo rule is seeded and reproducible") {
  QuadratureSpec spec;
  spec.mc_samples = 200;
  spec.seed = 99;
  const Body ball = with_chi(Ball{1.0, {0, 0, 0}});
  const NodeSet a = quadrature_nodes(ball, spec);
  const NodeSet b = quadrature_nodes(ball, spec);
  REQUIRE(a.nodes.size() == 200);
  CHECK(a.nodes == b.nodes);
  CHECK(weight_sum(a) == doctest::Approx(4.0 / 3.0 * kPi).epsilon(1e-12));
  spec.seed = 100;
  const NodeSet c = quadrature_nodes(ball, spec);
  CHECK(a.nodes != c.nodes);
}

TEST_CASE("min_separation for analytic shapes") {
  CHECK(min_separation(with_chi(SphereShell{1.0, {0, 0, 0}}),
                       with_chi(SphereShell{1.0, {4, 0, 0}})) == doctest::Approx(2.0));
  CHECK(min_separation(with_chi(Interval{0.0, 1.0}), with_chi(Interval{3.0, 5.0})) ==
        doctest::Approx(2.0));
  // One ring strictly inside another, shells still disjoint.
  CHECK(min_separation(with_chi(RingShell{3.0, {0, 0}}),
                       with_chi(RingShell{1.0, {0.5, 0}})) == doctest::Approx(1.5));
  CHECK_THROWS_AS(min_separation(with_chi(SphereShell{1.0, {0, 0, 0}}),
                                 with_chi(SphereShell{1.0, {0, 0, 0}})),
                  OverlapError);
  CHECK_THROWS_AS(min_separation(with_chi(Interval{0.0, 1.0}),
                                 with_chi(RingShell{1.0, {5, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_separation(with_chi(Ball{1.0, {0, 0, 0}}),
                                 with_chi(Ball{1.0, {1.5, 0, 0}})),
                  OverlapError);
}

TEST_CASE("min_separation between a ball and a sphere shell") {
  // Ball outside the shell.
  CHECK(min_separation(with_chi(Ball{0.5, {4, 0, 0}}),
                       with_chi(SphereShell{1.0, {0, 0, 0}})) == doctest::Approx(2.5));
  // Ball strictly inside the shell.
  CHECK(min_separation(with_chi(Ball{0.5, {0.2, 0, 0}}),
                       with_chi(SphereShell{3.0, {0, 0, 0}})) == doctest::Approx(2.3));
  // Ball crossing the shell surface.
  CHECK_THROWS_AS(min_separation(with_chi(Ball{0.5, {1.0, 0, 0}}),
                                 with_chi(SphereShell{1.2, {0, 0, 0}})),
                  OverlapError);
}

TEST_CASE("min_separation with point clouds") {
  PointCloud pc;
  pc.dim = 3;
  pc.nodes = {Vec3{0, 0, 0}, Vec3{0.5, 0, 0}};
  pc.weights = {1.0, 1.0};
  CHECK(min_separation(with_chi(pc), with_chi(SphereShell{1.0, {3, 0, 0}})) ==
        doctest::Approx(1.5));
  PointCloud other = pc;
  other.nodes = {Vec3{2.0, 0, 0}};
  other.weights = {1.0};
  CHECK(min_separation(with_chi(pc), with_chi(other)) == doctest::Approx(1.5));
}

TEST_CASE("sphere_point_distance against the Cartesian embedding") {
  CHECK(sphere_point_distance(3.0, 0.0, 0.0, 0.4, 1.1, 0.2, 2.2) == doctest::Approx(3.0));
  CHECK(sphere_point_distance(3.0, 0.5, 0.4, 0.0, 0.0, 1.0, 2.0) ==
        doctest::Approx(std::abs(3.0 - 0.5 + 0.4)).epsilon(1e-14));
  oracles::XorShift64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = rng.uniform(0.0, 1.0);
    const double b = rng.uniform(0.0, 1.0);
    const double R = a + b + rng.uniform(0.1, 4.0);
    const double th = rng.uniform(0.0, kPi), thp = rng.uniform(0.0, kPi);
    const double ph = rng.uniform(0.0, kTwoPi), php = rng.uniform(0.0, kTwoPi);
    const double d1 = sphere_point_distance(R, a, b, th, thp, ph, php);
    const double d2 = oracles::sphere_distance_cartesian(R, a, b, th, thp, ph, php);
    CHECK(std::abs(d1 - d2) <= 1e-12 * std::max(1.0, d2));
  }
}

TEST_CASE("shape invariants are enforced") {
  QuadratureSpec spec;
  CHECK_THROWS_AS(quadrature_nodes(with_chi(Interval{1.0, 1.0}), spec),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadrature_nodes(with_chi(SphereShell{0.0, {0, 0, 0}}), spec),
                  std::invalid_argument);
  PointCloud bad;
  bad.dim = 3;
  bad.nodes = {Vec3{0, 0, 0}};
  bad.weights = {0.0};
  CHECK_THROWS_AS(quadrature_nodes(with_chi(bad), spec), std::invalid_argument);
}

TEST_CASE("translated shifts supports rigidly") {
  const BodyShape s = SphereShell{1.0, {1, 2, 3}};
  const BodyShape t = translated(s, Vec3{-1, 0, 2});
  const Vec3 c = shape_centroid(t);
  CHECK(c[0] == 0.0);
  CHECK(c[1] == 2.0);
  CHECK(c[2] == 5.0);
}
