#include "casimir/scene.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include <json.hpp>

#include "casimir/closedform.hpp"
#include "casimir/errors.hpp"
#include "casimir/perturbation.hpp"
#include "casimir/validate.hpp"

namespace casimir {

namespace {

using nlohmann::json;

// Leaf access helpers collecting path-addressed errors.
class Cfg {
 public:
  explicit Cfg(std::vector<std::string>& errors) : errors_(errors) {}

  double num(const json& j, const std::string& path, const char* key,
             double fallback, bool required = false) {
    if (!j.contains(key)) {
      if (required) err(path + "." + key, "missing required number");
      return fallback;
    }
    if (!j[key].is_number()) {
      err(path + "." + key, "must be a number");
      return fallback;
    }
    return j[key].get<double>();
  }

  long integer(const json& j, const std::string& path, const char* key,
               long fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) {
      err(path + "." + key, "must be an integer");
      return fallback;
    }
    return j[key].get<long>();
  }

  std::string str(const json& j, const std::string& path, const char* key,
                  const std::string& fallback, bool required = false) {
    if (!j.contains(key)) {
      if (required) err(path + "." + key, "missing required string");
      return fallback;
    }
    if (!j[key].is_string()) {
      err(path + "." + key, "must be a string");
      return fallback;
    }
    return j[key].get<std::string>();
  }

  bool boolean(const json& j, const std::string& path, const char* key,
               bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) {
      err(path + "." + key, "must be a boolean");
      return fallback;
    }
    return j[key].get<bool>();
  }

  void err(const std::string& path, const std::string& message) {
    errors_.push_back(path + ": " + message);
  }

 private:
  std::vector<std::string>& errors_;
};

std::optional<Vec3> parse_vec(Cfg& cfg, const json& j, const std::string& path,
                              const char* key, std::size_t dim) {
  if (!j.contains(key)) {
    cfg.err(path + "." + key, "missing required array");
    return std::nullopt;
  }
  const json& v = j[key];
  if (!v.is_array() || v.size() != dim) {
    cfg.err(path + "." + key,
            "must be an array of " + std::to_string(dim) + " numbers");
    return std::nullopt;
  }
  Vec3 out{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) {
    if (!v[i].is_number()) {
      cfg.err(path + "." + key, "must contain numbers only");
      return std::nullopt;
    }
    out[i] = v[i].get<double>();
  }
  return out;
}

std::optional<SusceptibilityModel> parse_chi(Cfg& cfg, const json& j,
                                             const std::string& path) {
  if (!j.is_object()) {
    cfg.err(path, "must be an object");
    return std::nullopt;
  }
  const std::string model = cfg.str(j, path, "model", "", true);
  const double chi0 = cfg.num(j, path, "chi0", 0.0, true);
  if (chi0 < 0.0) cfg.err(path + ".chi0", "must be >= 0");
  if (model == "constant") {
    if (chi0 < 0.0) return std::nullopt;
    return SusceptibilityModel::constant(chi0);
  }
  if (model == "lorentz") {
    const double omega0 = cfg.num(j, path, "omega0", 1.0, true);
    const double gamma = cfg.num(j, path, "gamma", 0.0);
    if (!(omega0 > 0.0)) cfg.err(path + ".omega0", "must be > 0");
    if (gamma < 0.0) cfg.err(path + ".gamma", "must be >= 0");
    if (chi0 < 0.0 || !(omega0 > 0.0) || gamma < 0.0) return std::nullopt;
    return SusceptibilityModel::lorentz(chi0, omega0, gamma);
  }
  if (!model.empty()) {
    cfg.err(path + ".model", "unknown model \"" + model +
                                 "\" (allowed: constant, lorentz)");
  }
  return std::nullopt;
}

std::optional<BodyShape> parse_shape(Cfg& cfg, const json& j,
                                     const std::string& path) {
  if (!j.is_object()) {
    cfg.err(path, "must be an object");
    return std::nullopt;
  }
  const std::string type = cfg.str(j, path, "type", "", true);
  if (type == "interval") {
    const double a = cfg.num(j, path, "a", 0.0, true);
    const double b = cfg.num(j, path, "b", 0.0, true);
    if (!(b > a)) {
      cfg.err(path, "interval requires b > a");
      return std::nullopt;
    }
    return BodyShape{Interval{a, b}};
  }
  if (type == "ring_shell" || type == "sphere_shell" || type == "ball") {
    const double radius = cfg.num(j, path, "radius", 0.0, true);
    if (!(radius > 0.0)) {
      cfg.err(path + ".radius", "must be > 0");
      return std::nullopt;
    }
    if (type == "ring_shell") {
      auto c = parse_vec(cfg, j, path, "center", 2);
      if (!c) return std::nullopt;
      return BodyShape{RingShell{radius, {(*c)[0], (*c)[1]}}};
    }
    auto c = parse_vec(cfg, j, path, "center", 3);
    if (!c) return std::nullopt;
    if (type == "sphere_shell") return BodyShape{SphereShell{radius, *c}};
    return BodyShape{Ball{radius, *c}};
  }
  if (type == "point_cloud") {
    PointCloud pc;
    pc.dim = static_cast<int>(cfg.integer(j, path, "dim", 3));
    if (pc.dim < 1 || pc.dim > 3) {
      cfg.err(path + ".dim", "must be 1, 2 or 3");
      return std::nullopt;
    }
    if (!j.contains("nodes") || !j["nodes"].is_array() || !j.contains("weights") ||
        !j["weights"].is_array() || j["nodes"].size() != j["weights"].size() ||
        j["nodes"].empty()) {
      cfg.err(path, "point_cloud requires matching non-empty nodes and weights");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
      const json& node = j["nodes"][i];
      if (!node.is_array() || node.size() != static_cast<std::size_t>(pc.dim)) {
        cfg.err(path + ".nodes[" + std::to_string(i) + "]",
                "must be an array of " + std::to_string(pc.dim) + " numbers");
        return std::nullopt;
      }
      Vec3 x{0.0, 0.0, 0.0};
      for (int k = 0; k < pc.dim; ++k) x[k] = node[k].get<double>();
      pc.nodes.push_back(x);
      const json& w = j["weights"][i];
      if (!w.is_number() || !(w.get<double>() > 0.0)) {
        cfg.err(path + ".weights[" + std::to_string(i) + "]", "must be > 0");
        return std::nullopt;
      }
      pc.weights.push_back(w.get<double>());
    }
    return BodyShape{pc};
  }
  if (!type.empty()) {
    cfg.err(path + ".type",
            "unknown shape \"" + type +
                "\" (allowed: interval, ring_shell, sphere_shell, ball, point_cloud)");
  }
  return std::nullopt;
}

std::string overlap_path(const Body& body, std::size_t index) {
  const std::string base = "bodies[" + std::to_string(index) + "]";
  if (std::holds_alternative<Interval>(body.shape) ||
      std::holds_alternative<PointCloud>(body.shape)) {
    return base + ".shape";
  }
  return base + ".center";
}

}  // namespace

ParseOutcome parse_config(const std::string& text) {
  ParseOutcome out;
  json root = json::parse(text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    out.errors.push_back("config: not a valid JSON object");
    return out;
  }
  Cfg cfg(out.errors);
  SceneConfig sc;

  // field
  if (!root.contains("field") || !root["field"].is_object()) {
    cfg.err("field", "missing required object");
  } else {
    const json& f = root["field"];
    const std::string kind = cfg.str(f, "field", "kind", "", true);
    if (kind == "scalar") {
      const long dim = cfg.integer(f, "field", "dim", 3);
      if (dim < 1 || dim > 3) {
        cfg.err("field.dim", "must be 1, 2 or 3");
      } else {
        sc.kind = FieldKind::scalar(static_cast<int>(dim));
      }
    } else if (kind == "em") {
      sc.kind = FieldKind::em();
    } else if (kind == "proca") {
      const double mass = cfg.num(f, "field", "mass", 0.0, true);
      if (mass < 0.0) {
        cfg.err("field.mass", "must be >= 0");
      } else {
        sc.kind = FieldKind::proca(mass);
      }
    } else if (!kind.empty()) {
      cfg.err("field.kind",
              "unknown kind \"" + kind + "\" (allowed: scalar, em, proca)");
    }
  }

  // bodies
  if (!root.contains("bodies") || !root["bodies"].is_array() ||
      root["bodies"].empty()) {
    cfg.err("bodies", "missing required non-empty array");
  } else {
    for (std::size_t i = 0; i < root["bodies"].size(); ++i) {
      const std::string path = "bodies[" + std::to_string(i) + "]";
      const json& bj = root["bodies"][i];
      if (!bj.is_object()) {
        cfg.err(path, "must be an object");
        continue;
      }
      std::optional<BodyShape> shape;
      if (bj.contains("shape")) {
        shape = parse_shape(cfg, bj["shape"], path + ".shape");
      } else {
        cfg.err(path + ".shape", "missing required object");
      }
      std::optional<SusceptibilityModel> chi;
      if (bj.contains("susceptibility")) {
        chi = parse_chi(cfg, bj["susceptibility"], path + ".susceptibility");
      } else {
        cfg.err(path + ".susceptibility", "missing required object");
      }
      if (shape && chi) sc.bodies.push_back(Body{*shape, *chi});
    }
  }

  // thermal
  if (root.contains("thermal")) {
    const json& t = root["thermal"];
    const std::string mode = cfg.str(t, "thermal", "mode", "zero_t");
    if (mode == "zero_t") {
      ZeroTemperature zt;
      zt.nu_min = cfg.num(t, "thermal", "nu_min", 0.0);
      zt.rel_tol = cfg.num(t, "thermal", "rel_tol", 1e-10);
      if (zt.nu_min < 0.0) cfg.err("thermal.nu_min", "must be >= 0");
      if (!(zt.rel_tol > 0.0)) cfg.err("thermal.rel_tol", "must be > 0");
      sc.thermal = zt;
    } else if (mode == "finite_t") {
      FiniteTemperature ft;
      ft.temperature = cfg.num(t, "thermal", "temperature", 1.0, true);
      ft.rel_tol = cfg.num(t, "thermal", "rel_tol", 1e-10);
      ft.l_max_cap = cfg.integer(t, "thermal", "l_max_cap", 500000);
      if (!(ft.temperature > 0.0)) cfg.err("thermal.temperature", "must be > 0");
      if (!(ft.rel_tol > 0.0)) cfg.err("thermal.rel_tol", "must be > 0");
      if (ft.l_max_cap < 1) cfg.err("thermal.l_max_cap", "must be >= 1");
      const std::string zm = cfg.str(t, "thermal", "zero_mode", "auto");
      if (zm == "auto") ft.zero_mode = ZeroModeWeight::Auto;
      else if (zm == "full") ft.zero_mode = ZeroModeWeight::Full;
      else if (zm == "half") ft.zero_mode = ZeroModeWeight::Half;
      else if (zm == "skip") ft.zero_mode = ZeroModeWeight::Skip;
      else cfg.err("thermal.zero_mode",
                   "unknown value \"" + zm + "\" (allowed: auto, full, half, skip)");
      sc.thermal = ft;
    } else {
      cfg.err("thermal.mode",
              "unknown mode \"" + mode + "\" (allowed: zero_t, finite_t)");
    }
  }

  // quadrature
  if (root.contains("quadrature")) {
    const json& q = root["quadrature"];
    sc.quad.angular_order = static_cast<int>(cfg.integer(q, "quadrature", "angular_order", 64));
    sc.quad.radial_order = static_cast<int>(cfg.integer(q, "quadrature", "radial_order", 32));
    sc.quad.mc_samples = static_cast<int>(cfg.integer(q, "quadrature", "mc_samples", 0));
    sc.quad.seed = static_cast<std::uint64_t>(cfg.integer(q, "quadrature", "seed", 20210607));
    if (sc.quad.angular_order < 1) cfg.err("quadrature.angular_order", "must be >= 1");
    if (sc.quad.radial_order < 1) cfg.err("quadrature.radial_order", "must be >= 1");
    if (sc.quad.mc_samples < 0) cfg.err("quadrature.mc_samples", "must be >= 0");
  }

  // task
  const std::string task = cfg.str(root, "config", "task", "energy");
  if (task == "energy") sc.task = Task::Energy;
  else if (task == "force") sc.task = Task::Force;
  else if (task == "sweep") sc.task = Task::Sweep;
  else if (task == "series") sc.task = Task::Series;
  else if (task == "validate") sc.task = Task::Validate;
  else cfg.err("task", "unknown task \"" + task +
                           "\" (allowed: energy, force, sweep, series, validate)");

  if (root.contains("sweep")) {
    const json& s = root["sweep"];
    SweepSpec spec;
    spec.parameter = cfg.str(s, "sweep", "parameter", "R");
    spec.min = cfg.num(s, "sweep", "min", 0.0, true);
    spec.max = cfg.num(s, "sweep", "max", 0.0, true);
    spec.points = static_cast<int>(cfg.integer(s, "sweep", "points", 2));
    const std::string scale = cfg.str(s, "sweep", "scale", "linear");
    spec.log_scale = scale == "log";
    if (scale != "linear" && scale != "log") {
      cfg.err("sweep.scale", "unknown scale \"" + scale + "\" (allowed: linear, log)");
    }
    if (spec.parameter != "R" && spec.parameter != "T") {
      cfg.err("sweep.parameter", "unknown parameter \"" + spec.parameter +
                                     "\" (allowed: R, T)");
    }
    if (spec.points < 2) cfg.err("sweep.points", "must be >= 2");
    if (!(spec.min > 0.0) || !(spec.max > spec.min)) {
      cfg.err("sweep", "requires 0 < min < max");
    }
    if (spec.log_scale && !(spec.min > 0.0)) cfg.err("sweep.min", "must be > 0 for log scale");
    sc.sweep = spec;
  }

  if (root.contains("force")) {
    const json& f = root["force"];
    sc.force_dr = cfg.num(f, "force", "dr", 1e-3);
    sc.force_richardson = cfg.boolean(f, "force", "richardson", false);
    if (!(sc.force_dr > 0.0)) cfg.err("force.dr", "must be > 0");
  }
  if (root.contains("series")) {
    sc.series_n_max = static_cast<int>(cfg.integer(root["series"], "series", "n_max", 4));
    if (sc.series_n_max < 1) cfg.err("series.n_max", "must be >= 1");
  }

  // Cross-field physical validation.
  if (out.errors.empty() && sc.task != Task::Validate) {
    if ((sc.task == Task::Energy || sc.task == Task::Force || sc.task == Task::Sweep) &&
        sc.bodies.size() != 2) {
      cfg.err("bodies", "this task requires exactly 2 bodies");
    }
    if (sc.task == Task::Sweep && !sc.sweep) {
      cfg.err("sweep", "missing required object for the sweep task");
    }
    for (std::size_t i = 0; i < sc.bodies.size(); ++i) {
      if (shape_dim(sc.bodies[i].shape) != sc.kind.spatial_dim()) {
        cfg.err("bodies[" + std::to_string(i) + "].shape",
                "dimension does not match the field kind");
      }
    }
    if (out.errors.empty() && !(sc.task == Task::Sweep && sc.sweep &&
                                sc.sweep->parameter == "R")) {
      for (std::size_t i = 0; i < sc.bodies.size(); ++i) {
        for (std::size_t j = i + 1; j < sc.bodies.size(); ++j) {
          try {
            min_separation(sc.bodies[i], sc.bodies[j]);
          } catch (const OverlapError&) {
            cfg.err(overlap_path(sc.bodies[j], j),
                    "bodies " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap (min separation <= 0)");
          }
        }
      }
    }
  }

  if (out.errors.empty()) out.config = sc;
  return out;
}

namespace {

std::string g17(double x) {
  if (x == 0.0) return "0";  // normalize negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double centroid_distance(const SceneConfig& sc) {
  const Vec3 a = shape_centroid(sc.bodies[0].shape);
  const Vec3 b = shape_centroid(sc.bodies[1].shape);
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) +
                   (a[2] - b[2]) * (a[2] - b[2]));
}

// Closed-form reference for the scene when one applies.
std::optional<double> scene_oracle(const SceneConfig& sc, double separation) {
  if (sc.bodies.size() != 2) return std::nullopt;
  if (!sc.bodies[0].chi.is_constant() || !sc.bodies[1].chi.is_constant()) {
    return std::nullopt;
  }
  if (!std::holds_alternative<ZeroTemperature>(sc.thermal)) return std::nullopt;
  const double chi1 = sc.bodies[0].chi.chi0;
  const double chi2 = sc.bodies[1].chi.chi0;
  const auto* ra = std::get_if<RingShell>(&sc.bodies[0].shape);
  const auto* rb = std::get_if<RingShell>(&sc.bodies[1].shape);
  if (ra && rb && sc.kind.tag == FieldKind::Tag::Scalar && sc.kind.dim == 2) {
    return energy_rings_2d(ra->radius, rb->radius, separation, chi1, chi2);
  }
  const auto* sa = std::get_if<SphereShell>(&sc.bodies[0].shape);
  const auto* sb = std::get_if<SphereShell>(&sc.bodies[1].shape);
  if (sa && sb) {
    const SpherePairGeometry geom(sa->radius, sb->radius, separation);
    if (sc.kind.tag == FieldKind::Tag::Scalar && sc.kind.dim == 3) {
      return energy_spheres_3d_scalar(geom, chi1, chi2);
    }
    if (sc.kind.tag == FieldKind::Tag::EM) {
      return energy_em_spheres(geom, chi1, chi2, 0.0);
    }
  }
  return std::nullopt;
}

void print_energy_row(std::ostream& out, double parameter, const EnergyResult& er,
                      std::optional<double> oracle) {
  out << g17(parameter) << ',' << g17(er.energy) << ',' << g17(er.quad_error) << ','
      << g17(er.thermal_tail) << ',';
  if (oracle) {
    const double dev = *oracle == 0.0 ? std::abs(er.energy)
                                      : std::abs(er.energy - *oracle) / std::abs(*oracle);
    out << g17(*oracle) << ',' << g17(dev);
  } else {
    out << ',';
  }
  out << '\n';
}

TwoBodyScene as_scene(const SceneConfig& sc) {
  return TwoBodyScene{sc.bodies[0], sc.bodies[1], sc.kind, sc.thermal, sc.quad};
}

int run_task_inner(const SceneConfig& sc, std::ostream& out) {
  switch (sc.task) {
    case Task::Energy: {
      const double R = centroid_distance(sc);
      const EnergyResult er = pair_energy(sc.bodies[0], sc.bodies[1], sc.kind,
                                          sc.thermal, sc.quad);
      out << "parameter,energy,quad_error,thermal_tail,oracle,rel_deviation\n";
      print_energy_row(out, R, er, scene_oracle(sc, R));
      return 0;
    }
    case Task::Force: {
      const double R = centroid_distance(sc);
      const double f = force(as_scene(sc), R, sc.force_dr * R, sc.force_richardson);
      out << "parameter,force,quad_error,thermal_tail,oracle,rel_deviation\n";
      out << g17(R) << ',' << g17(f) << ",0,0,,\n";
      return 0;
    }
    case Task::Sweep: {
      const SweepSpec& sw = *sc.sweep;
      out << "parameter,energy,quad_error,thermal_tail,oracle,rel_deviation\n";
      for (int i = 0; i < sw.points; ++i) {
        const double t = sw.points == 1 ? 0.0
                                        : static_cast<double>(i) / (sw.points - 1);
        const double x = sw.log_scale ? sw.min * std::pow(sw.max / sw.min, t)
                                      : sw.min + (sw.max - sw.min) * t;
        if (sw.parameter == "R") {
          const EnergyResult er = scene_energy(as_scene(sc), x);
          print_energy_row(out, x, er, scene_oracle(sc, x));
        } else {
          SceneConfig probe = sc;
          FiniteTemperature ft;
          if (const auto* cur = std::get_if<FiniteTemperature>(&sc.thermal)) ft = *cur;
          ft.temperature = x;
          probe.thermal = ft;
          const EnergyResult er = pair_energy(probe.bodies[0], probe.bodies[1],
                                              probe.kind, probe.thermal, probe.quad);
          print_energy_row(out, x, er, std::nullopt);
        }
      }
      return 0;
    }
    case Task::Series: {
      const auto terms = series_energy(sc.bodies, sc.series_n_max, sc.kind,
                                       sc.thermal, sc.quad);
      out << "order,energy,quad_error,thermal_tail,oracle,rel_deviation\n";
      for (std::size_t n = 0; n < terms.size(); ++n) {
        print_energy_row(out, static_cast<double>(n + 1), terms[n], std::nullopt);
      }
      // Order 0 row holds the log-det resummation of the same scene.
      const EnergyResult ld = logdet_energy(sc.bodies, sc.kind, sc.thermal, sc.quad);
      print_energy_row(out, 0.0, ld, std::nullopt);
      return 0;
    }
    case Task::Validate: {
      const auto results = validate_all();
      out << validate_report_csv(results);
      return all_pass(results) ? 0 : 4;
    }
  }
  return 1;
}

}  // namespace

int run_task(const SceneConfig& sc, std::ostream& out) {
  try {
    return run_task_inner(sc, out);
  } catch (const OverlapError& e) {
    out.flush();
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ConvergenceError& e) {
    out.flush();
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    out.flush();
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace casimir
