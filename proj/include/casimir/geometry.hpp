#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "casimir/kernels.hpp"
#include "casimir/susceptibility.hpp"

namespace casimir {

// Body supports. Shells carry a surface-delta susceptibility
// chi(x) = chi * delta(r - radius), so their measure is radius dtheta (ring)
// or radius^2 dOmega (sphere).
struct Interval {
  double a = 0.0, b = 1.0;  // requires b > a
};

struct RingShell {
  double radius = 1.0;
  std::array<double, 2> center{0.0, 0.0};
};

struct SphereShell {
  double radius = 1.0;
  Vec3 center{0.0, 0.0, 0.0};
};

struct Ball {
  double radius = 1.0;
  Vec3 center{0.0, 0.0, 0.0};
};

struct PointCloud {
  int dim = 3;
  std::vector<Vec3> nodes;      // components beyond dim must be zero
  std::vector<double> weights;  // positive measure weights
};

using BodyShape = std::variant<Interval, RingShell, SphereShell, Ball, PointCloud>;

struct Body {
  BodyShape shape;
  SusceptibilityModel chi;
};

struct QuadratureSpec {
  int angular_order = 64;
  int radial_order = 32;
  int mc_samples = 0;  // > 0 switches Ball discretization to seeded MC
  std::uint64_t seed = 20210607u;
};

struct NodeSet {
  int dim = 3;
  std::vector<Vec3> nodes;
  std::vector<double> weights;
};

int shape_dim(const BodyShape& shape);
Vec3 shape_centroid(const BodyShape& shape);
BodyShape translated(const BodyShape& shape, const Vec3& delta);

// Nodes and positive weights such that sum w_i f(x_i) -> integral of f over
// the body's measure. Interval: Gauss-Legendre (radial_order). RingShell:
// periodic trapezoid (angular_order). SphereShell: Gauss-Legendre in
// cos(theta) (radial_order) x trapezoid in phi (angular_order). Ball: radial
// Gauss-Legendre x sphere rule, or seeded Monte Carlo when mc_samples > 0.
// PointCloud: returned verbatim.
NodeSet quadrature_nodes(const Body& body, const QuadratureSpec& spec);

// Exact minimal Euclidean distance between the supports. Throws OverlapError
// when the supports touch or overlap.
double min_separation(const Body& a, const Body& b);

// Distance between points on two spheres of radii a and b whose centers are
// R apart along the z axis of both spherical coordinate systems.
double sphere_point_distance(double R, double a, double b, double theta,
                             double theta_p, double phi, double phi_p);

}  // namespace casimir
