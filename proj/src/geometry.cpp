#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

double norm3(const Vec3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Vec3 diff(const Vec3& a, const Vec3& b) {
  return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

void check_interval(const Interval& s) {
  if (!(s.b > s.a)) throw std::invalid_argument("interval: requires b > a");
}

void check_radius(double r, const char* what) {
  if (!(r > 0.0)) throw std::invalid_argument(std::string(what) + ": radius must be > 0");
}

void check_cloud(const PointCloud& s) {
  if (s.nodes.empty() || s.nodes.size() != s.weights.size()) {
    throw std::invalid_argument("point_cloud: needs matching non-empty nodes and weights");
  }
  if (s.dim < 1 || s.dim > 3) throw std::invalid_argument("point_cloud: dim must be 1, 2 or 3");
  for (double w : s.weights) {
    if (!(w > 0.0)) throw std::invalid_argument("point_cloud: weights must be > 0");
  }
}

// Unit-sphere surface rule: Gauss-Legendre in cos(theta) x periodic
// trapezoid in phi. Weights sum to 4 pi.
void unit_sphere_rule(int polar_order, int azimuth_order, std::vector<Vec3>& nodes,
                      std::vector<double>& weights) {
  const GaussLegendre gl = gauss_legendre(polar_order);
  const double dphi = kTwoPi / azimuth_order;
  for (int i = 0; i < polar_order; ++i) {
    const double ct = gl.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < azimuth_order; ++j) {
      const double phi = dphi * j;
      nodes.push_back(Vec3{st * std::cos(phi), st * std::sin(phi), ct});
      weights.push_back(gl.weights[i] * dphi);
    }
  }
}

}  // namespace

int shape_dim(const BodyShape& shape) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) return 1;
        else if constexpr (std::is_same_v<T, RingShell>) return 2;
        else if constexpr (std::is_same_v<T, PointCloud>) return s.dim;
        else return 3;
      },
      shape);
}

Vec3 shape_centroid(const BodyShape& shape) {
  return std::visit(
      [](const auto& s) -> Vec3 {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) {
          return Vec3{0.5 * (s.a + s.b), 0.0, 0.0};
        } else if constexpr (std::is_same_v<T, RingShell>) {
          return Vec3{s.center[0], s.center[1], 0.0};
        } else if constexpr (std::is_same_v<T, PointCloud>) {
          double wsum = 0.0;
          Vec3 c{0.0, 0.0, 0.0};
          for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            wsum += s.weights[i];
            for (int k = 0; k < 3; ++k) c[k] += s.weights[i] * s.nodes[i][k];
          }
          for (int k = 0; k < 3; ++k) c[k] /= wsum;
          return c;
        } else {
          return s.center;
        }
      },
      shape);
}

BodyShape translated(const BodyShape& shape, const Vec3& delta) {
  BodyShape out = shape;
  std::visit(
      [&delta](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) {
          s.a += delta[0];
          s.b += delta[0];
        } else if constexpr (std::is_same_v<T, RingShell>) {
          s.center[0] += delta[0];
          s.center[1] += delta[1];
        } else if constexpr (std::is_same_v<T, PointCloud>) {
          for (auto& x : s.nodes) {
            for (int k = 0; k < s.dim; ++k) x[k] += delta[k];
          }
        } else {
          for (int k = 0; k < 3; ++k) s.center[k] += delta[k];
        }
      },
      out);
  return out;
}

NodeSet quadrature_nodes(const Body& body, const QuadratureSpec& spec) {
  if (spec.angular_order < 1 || spec.radial_order < 1) {
    throw std::invalid_argument("quadrature_spec: orders must be >= 1");
  }
  NodeSet out;
  out.dim = shape_dim(body.shape);

  if (const auto* s = std::get_if<Interval>(&body.shape)) {
    check_interval(*s);
    const GaussLegendre gl = gauss_legendre(spec.radial_order);
    const double mid = 0.5 * (s->a + s->b);
    const double half = 0.5 * (s->b - s->a);
    for (int i = 0; i < spec.radial_order; ++i) {
      out.nodes.push_back(Vec3{mid + half * gl.nodes[i], 0.0, 0.0});
      out.weights.push_back(half * gl.weights[i]);
    }
  } else if (const auto* s = std::get_if<RingShell>(&body.shape)) {
    check_radius(s->radius, "ring_shell");
    const int n = spec.angular_order;
    const double w = s->radius * kTwoPi / n;
    for (int i = 0; i < n; ++i) {
      const double th = kTwoPi * i / n;
      out.nodes.push_back(Vec3{s->center[0] + s->radius * std::cos(th),
                               s->center[1] + s->radius * std::sin(th), 0.0});
      out.weights.push_back(w);
    }
  } else if (const auto* s = std::get_if<SphereShell>(&body.shape)) {
    check_radius(s->radius, "sphere_shell");
    std::vector<Vec3> unit;
    std::vector<double> uw;
    unit_sphere_rule(spec.radial_order, spec.angular_order, unit, uw);
    const double r2 = s->radius * s->radius;
    for (std::size_t i = 0; i < unit.size(); ++i) {
      out.nodes.push_back(Vec3{s->center[0] + s->radius * unit[i][0],
                               s->center[1] + s->radius * unit[i][1],
                               s->center[2] + s->radius * unit[i][2]});
      out.weights.push_back(r2 * uw[i]);
    }
  } else if (const auto* s = std::get_if<Ball>(&body.shape)) {
    check_radius(s->radius, "ball");
    if (spec.mc_samples > 0) {
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> u(-s->radius, s->radius);
      const double volume = 4.0 / 3.0 * kPi * s->radius * s->radius * s->radius;
      const double w = volume / spec.mc_samples;
      int kept = 0;
      while (kept < spec.mc_samples) {
        Vec3 p{u(rng), u(rng), u(rng)};
        if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] > s->radius * s->radius) continue;
        out.nodes.push_back(Vec3{s->center[0] + p[0], s->center[1] + p[1], s->center[2] + p[2]});
        out.weights.push_back(w);
        ++kept;
      }
    } else {
      std::vector<Vec3> unit;
      std::vector<double> uw;
      unit_sphere_rule(spec.radial_order, spec.angular_order, unit, uw);
      const GaussLegendre gl = gauss_legendre(spec.radial_order);
      for (int i = 0; i < spec.radial_order; ++i) {
        const double r = 0.5 * s->radius * (gl.nodes[i] + 1.0);
        const double wr = 0.5 * s->radius * gl.weights[i] * r * r;
        if (!(r > 0.0)) continue;
        for (std::size_t j = 0; j < unit.size(); ++j) {
          out.nodes.push_back(Vec3{s->center[0] + r * unit[j][0],
                                   s->center[1] + r * unit[j][1],
                                   s->center[2] + r * unit[j][2]});
          out.weights.push_back(wr * uw[j]);
        }
      }
    }
  } else {
    const auto& cloud = std::get<PointCloud>(body.shape);
    check_cloud(cloud);
    out.nodes = cloud.nodes;
    out.weights = cloud.weights;
  }
  return out;
}

namespace {

// Distance from a point to a shape support; negative means inside a filled
// shape (overlap for separation purposes).
double point_to_shape(const Vec3& p, const BodyShape& shape) {
  if (const auto* s = std::get_if<Interval>(&shape)) {
    if (p[0] < s->a) return s->a - p[0];
    if (p[0] > s->b) return p[0] - s->b;
    return 0.0;
  }
  if (const auto* s = std::get_if<RingShell>(&shape)) {
    const double d = std::hypot(p[0] - s->center[0], p[1] - s->center[1]);
    return std::abs(d - s->radius);
  }
  if (const auto* s = std::get_if<SphereShell>(&shape)) {
    return std::abs(norm3(diff(p, s->center)) - s->radius);
  }
  if (const auto* s = std::get_if<Ball>(&shape)) {
    return norm3(diff(p, s->center)) - s->radius;
  }
  const auto& s = std::get<PointCloud>(shape);
  double best = std::numeric_limits<double>::max();
  for (const auto& q : s.nodes) best = std::min(best, norm3(diff(p, q)));
  return best;
}

double shell_shell_separation(double d, double r1, double r2) {
  if (d > r1 + r2) return d - r1 - r2;
  const double inner = std::abs(r1 - r2) - d;
  return inner;  // <= 0 when the shells intersect
}

}  // namespace

double min_separation(const Body& body_a, const Body& body_b) {
  const BodyShape& a = body_a.shape;
  const BodyShape& b = body_b.shape;
  if (shape_dim(a) != shape_dim(b)) {
    throw std::invalid_argument("min_separation: bodies of different dimension");
  }

  double sep = std::numeric_limits<double>::max();
  if (const auto* ia = std::get_if<Interval>(&a)) {
    if (const auto* ib = std::get_if<Interval>(&b)) {
      check_interval(*ia);
      check_interval(*ib);
      sep = std::max(ib->a - ia->b, ia->a - ib->b);
    }
  }
  if (sep == std::numeric_limits<double>::max()) {
    if (const auto* ra = std::get_if<RingShell>(&a)) {
      if (const auto* rb = std::get_if<RingShell>(&b)) {
        const double d = std::hypot(ra->center[0] - rb->center[0],
                                    ra->center[1] - rb->center[1]);
        sep = shell_shell_separation(d, ra->radius, rb->radius);
      }
    }
  }
  if (sep == std::numeric_limits<double>::max()) {
    const auto* sa = std::get_if<SphereShell>(&a);
    const auto* sb = std::get_if<SphereShell>(&b);
    if (sa && sb) {
      sep = shell_shell_separation(norm3(diff(sa->center, sb->center)), sa->radius,
                                   sb->radius);
    }
  }
  if (sep == std::numeric_limits<double>::max()) {
    const auto* ba = std::get_if<Ball>(&a);
    const auto* bb = std::get_if<Ball>(&b);
    if (ba && bb) {
      sep = norm3(diff(ba->center, bb->center)) - ba->radius - bb->radius;
    } else if (ba || bb) {
      // Ball against shell: compare the shell radius with the interval of
      // center distances covered by the ball.
      const Ball* ball = ba ? ba : std::get_if<Ball>(&b);
      const SphereShell* shell = ba ? std::get_if<SphereShell>(&b) : std::get_if<SphereShell>(&a);
      if (ball && shell) {
        const double d = norm3(diff(ball->center, shell->center));
        if (shell->radius > d + ball->radius) {
          sep = shell->radius - d - ball->radius;
        } else if (shell->radius < d - ball->radius) {
          sep = d - ball->radius - shell->radius;
        } else {
          sep = 0.0;
        }
      }
    }
  }
  if (sep == std::numeric_limits<double>::max()) {
    const auto* ca = std::get_if<PointCloud>(&a);
    const auto* cb = std::get_if<PointCloud>(&b);
    if (ca && cb) {
      check_cloud(*ca);
      check_cloud(*cb);
      sep = std::numeric_limits<double>::max();
      for (const auto& p : ca->nodes) {
        for (const auto& q : cb->nodes) sep = std::min(sep, norm3(diff(p, q)));
      }
    } else if (ca || cb) {
      const PointCloud* cloud = ca ? ca : cb;
      const BodyShape& other = ca ? b : a;
      check_cloud(*cloud);
      sep = std::numeric_limits<double>::max();
      for (const auto& p : cloud->nodes) sep = std::min(sep, point_to_shape(p, other));
    }
  }
  if (sep == std::numeric_limits<double>::max()) {
    throw std::invalid_argument("min_separation: unsupported shape combination");
  }
  if (!(sep > 0.0)) {
    throw OverlapError("min_separation: body supports touch or overlap");
  }
  return sep;
}

double sphere_point_distance(double R, double a, double b, double theta,
                             double theta_p, double phi, double phi_p) {
  if (!(R > 0.0)) throw std::domain_error("sphere_point_distance: requires R > 0");
  const double cg = std::cos(theta) * std::cos(theta_p) +
                    std::sin(theta) * std::sin(theta_p) * std::cos(phi - phi_p);
  const double d2 = R * R + a * a + b * b - 2.0 * a * b * cg -
                    2.0 * R * (a * std::cos(theta) - b * std::cos(theta_p));
  if (d2 < 0.0) {
    throw std::runtime_error("sphere_point_distance: negative radicand (internal)");
  }
  return std::sqrt(d2);
}

}  // namespace casimir
