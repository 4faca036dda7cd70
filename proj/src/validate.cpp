#include "casimir/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include "casimir/closedform.hpp"
#include "casimir/constants.hpp"
#include "casimir/geometry.hpp"
#include "casimir/kernels.hpp"
#include "casimir/perturbation.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special_functions.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

namespace {

double rel_dev(double x, double ref) {
  if (ref == 0.0) return std::abs(x);
  return std::abs(x - ref) / std::abs(ref);
}

CheckResult gated(const std::string& id, double engine, double oracle, double tol,
                  const std::string& note) {
  CheckResult r;
  r.id = id;
  r.engine = engine;
  r.oracle = oracle;
  r.deviation = rel_dev(engine, oracle);
  r.tolerance = tol;
  r.status = r.deviation <= tol ? "PASS" : "FAIL";
  r.note = note;
  return r;
}

CheckResult info(const std::string& id, double engine, double oracle,
                 double deviation, const std::string& note) {
  CheckResult r;
  r.id = id;
  r.engine = engine;
  r.oracle = oracle;
  r.deviation = deviation;
  r.tolerance = 0.0;
  r.status = "INFO";
  r.note = note;
  return r;
}

Body ring_body(double radius, double cx, double chi) {
  return Body{RingShell{radius, {cx, 0.0}}, SusceptibilityModel::constant(chi)};
}

Body sphere_body(double radius, double cx, double chi) {
  return Body{SphereShell{radius, {cx, 0.0, 0.0}}, SusceptibilityModel::constant(chi)};
}

Body point_body(int dim, double cx, double chi, double weight = 1.0) {
  PointCloud pc;
  pc.dim = dim;
  pc.nodes.push_back(Vec3{cx, 0.0, 0.0});
  pc.weights.push_back(weight);
  return Body{pc, SusceptibilityModel::constant(chi)};
}

// Static 3D kernel chi1 chi2 / (64 pi^3 r^3) summed over shell quadratures;
// the direct zero-temperature route that arbitrates the printed log formula.
double spheres_static_quadrature(double a, double b, double R, double chi,
                                 const QuadratureSpec& spec) {
  const NodeSet na = quadrature_nodes(sphere_body(a, 0.0, chi), spec);
  const NodeSet nb = quadrature_nodes(sphere_body(b, R, chi), spec);
  double sum = 0.0;
  for (std::size_t i = 0; i < na.nodes.size(); ++i) {
    for (std::size_t j = 0; j < nb.nodes.size(); ++j) {
      const double dx = na.nodes[i][0] - nb.nodes[j][0];
      const double dy = na.nodes[i][1] - nb.nodes[j][1];
      const double dz = na.nodes[i][2] - nb.nodes[j][2];
      const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
      sum += na.weights[i] * nb.weights[j] / (r * r * r);
    }
  }
  return -chi * chi / (64.0 * kPi * kPi * kPi) * sum;
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(xs[i]);
    my += std::log(std::abs(ys[i]));
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(std::abs(ys[i])) - my);
  }
  return sxy / sxx;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  }
  return g;
}

}  // namespace

double sphere_pair_power_mean_quad(int p, double a_hat, double b_hat,
                                   int polar_order, int azimuthal_order) {
  const GaussLegendre gl = gauss_legendre(polar_order);
  std::vector<double> theta(polar_order);
  for (int i = 0; i < polar_order; ++i) theta[i] = std::acos(gl.nodes[i]);
  const double dpsi = kTwoPi / azimuthal_order;

  double sum = 0.0;
  for (int i = 0; i < polar_order; ++i) {
    for (int j = 0; j < polar_order; ++j) {
      double inner = 0.0;
      for (int k = 0; k < azimuthal_order; ++k) {
        const double d =
            sphere_point_distance(1.0, a_hat, b_hat, theta[i], theta[j], dpsi * k, 0.0);
        inner += std::pow(d, p);
      }
      sum += gl.weights[i] * gl.weights[j] * inner * dpsi;
    }
  }
  return sum / (8.0 * kPi);
}

std::vector<CheckResult> validate_all() {
  std::vector<CheckResult> out;

  // --- criterion 1: 2D rings, angular quadrature vs closed form -------------
  {
    const double geoms[3][3] = {{0.5, 0.7, 3.0}, {1.0, 1.0, 4.0}, {0.2, 1.5, 5.0}};
    QuadratureSpec spec;
    spec.angular_order = 256;
    for (int g = 0; g < 3; ++g) {
      const double a = geoms[g][0], b = geoms[g][1], R = geoms[g][2];
      EnergyResult engine = pair_energy(ring_body(a, 0.0, 1.0), ring_body(b, R, 1.0),
                                        FieldKind::scalar(2), ZeroTemperature{}, spec);
      const double oracle = energy_rings_2d(a, b, R, 1.0, 1.0);
      out.push_back(gated("c01_rings_" + std::to_string(g + 1), engine.energy, oracle,
                          1e-8, "ring quadrature vs closed form"));
    }
  }

  // --- criterion 2: 3D scalar spheres, static quadrature vs log formula -----
  {
    const double geoms[2][3] = {{0.5, 0.5, 3.0}, {0.3, 0.8, 4.0}};
    QuadratureSpec spec;
    spec.radial_order = 32;
    spec.angular_order = 64;
    for (int g = 0; g < 2; ++g) {
      const double a = geoms[g][0], b = geoms[g][1], R = geoms[g][2];
      const double quad = spheres_static_quadrature(a, b, R, 1.0, spec);
      const SpherePairGeometry geom(a, b, R);
      const double corrected = energy_spheres_3d_scalar(geom, 1.0, 1.0);
      const double printed =
          energy_spheres_3d_scalar(geom, 1.0, 1.0, SphereLogVariant::PrintedPlus);
      out.push_back(gated("c02_spheres3d_" + std::to_string(g + 1), quad, corrected,
                          1e-6, "shell quadrature vs corrected log formula"));
      out.push_back(info("i02_spheres3d_printed_" + std::to_string(g + 1), printed,
                         quad, rel_dev(printed, quad),
                         "printed 1+(a+b)^2/R^2 variant vs quadrature"));
    }
  }

  // --- criterion 3: EM spheres at zero temperature --------------------------
  {
    QuadratureSpec spec;
    spec.radial_order = 16;
    spec.angular_order = 32;
    ZeroTemperature zt;
    zt.rel_tol = 1e-9;
    EnergyResult engine = pair_energy(sphere_body(0.25, 0.0, 1.0),
                                      sphere_body(0.25, 2.0, 1.0), FieldKind::em(),
                                      zt, spec);
    const double oracle = energy_em_spheres(SpherePairGeometry(0.25, 0.25, 2.0), 1.0,
                                            1.0, 0.0);
    out.push_back(gated("c03_em_spheres", engine.energy, oracle, 1e-4,
                        "EM pair energy vs P_-7 closed form"));
  }

  // --- criterion 4: P_p three-way agreement ---------------------------------
  {
    const double grid[4] = {0.05, 0.1, 0.2, 0.3};
    for (int p = -2; p >= -7; --p) {
      double worst = 0.0;
      for (double ah : grid) {
        for (double bh : grid) {
          if (ah + bh > 0.6 + 1e-12) continue;
          const double series = legendre_series_P(p, ah, bh, 400).value;
          const double recur = recursion_P(p, ah, bh);
          const double quad = sphere_pair_power_mean_quad(p, ah, bh, 64, 128);
          worst = std::max(worst, rel_dev(series, recur));
          worst = std::max(worst, rel_dev(series, quad));
          worst = std::max(worst, rel_dev(recur, quad));
        }
      }
      CheckResult r;
      r.id = "c04_Pp_p" + std::to_string(-p);
      r.engine = worst;
      r.oracle = 0.0;
      r.deviation = worst;
      r.tolerance = 1e-8;
      r.status = worst <= r.tolerance ? "PASS" : "FAIL";
      r.note = "max pairwise deviation of series/recursion/quadrature";
      out.push_back(r);
    }
    const double printed6 = p_minus6_printed(0.2, 0.3);
    const double recur6 = recursion_P(-6, 0.2, 0.3);
    out.push_back(info("i04_p6_printed", printed6, recur6, printed6 / recur6,
                       "printed P_-6 over recursion value (fixed factor)"));
    const double printed7 = p_minus7_printed(0.2, 0.3);
    const double recur7 = recursion_P(-7, 0.2, 0.3);
    out.push_back(info("i04_p7_printed", printed7, recur7, printed7 / recur7,
                       "printed P_-7 over recursion value"));
  }

  // --- criterion 5: EM kernel frequency integral ----------------------------
  for (double r : {0.5, 1.0, 2.0}) {
    auto h = [r](double nu) { return em_pair_h(nu, r); };
    QuadratureResult q = integrate_decaying_tail(h, 0.0, 2.0 * r, 1e-13);
    const double engine = q.value / kTwoPi;
    const double oracle = 23.0 / (64.0 * kPi * kPi * kPi * std::pow(r, 7));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", r);
    out.push_back(gated(std::string("c05_em_nu_integral_r") + buf, engine, oracle,
                        1e-10, "(1/2pi) int h dnu vs 23/(64 pi^3 r^7)"));
  }

  // --- criterion 6: 1D force ------------------------------------------------
  {
    const double a = 0.0, b = 0.5, c = 1.5, d = 2.1;
    const SusceptibilityModel l1 = SusceptibilityModel::lorentz(1.0, 2.0, 0.3);
    const SusceptibilityModel l2 = SusceptibilityModel::lorentz(0.8, 1.5, 0.1);
    const double T = 0.02;
    const double r = 0.5 * ((c + d) - (a + b));
    const double rp = 0.5 * (d - c), rpp = 0.5 * (b - a);
    const double analytic = force_1d_finite_t(r, rp, rpp, l1, l2, T);

    FiniteTemperature ft;
    ft.temperature = T;
    ft.rel_tol = 1e-12;
    const double dr = 5e-4 * r;
    const EnergyResult ep = energy_1d_intervals(a, b, c + dr, d + dr, l1, l2, ft);
    const EnergyResult em = energy_1d_intervals(a, b, c - dr, d - dr, l1, l2, ft);
    const double central = -(ep.energy - em.energy) / (2.0 * dr);
    out.push_back(gated("c06_force1d_centraldiff", central, analytic, 1e-6,
                        "central difference of interval energy vs analytic sum"));

    const SusceptibilityModel c1 = SusceptibilityModel::constant(1.0);
    const SusceptibilityModel c2 = SusceptibilityModel::constant(1.0);
    const double f1 = force_1d_finite_t(r, rp, rpp, c1, c2, 1e-3);
    const double f2 = force_1d_finite_t(r, rp, rpp, c1, c2, 5e-4);
    const double extrapolated = (4.0 * f2 - f1) / 3.0;
    const double zero_t = force_1d_zero_t(a, b, c, d, 1.0, 1.0);
    out.push_back(gated("c06_force1d_zerot", extrapolated, zero_t, 1e-4,
                        "T->0 extrapolation vs zero-T closed form"));

    const double printed = force_1d_zero_t_incgamma_variant(a, b, c, d, 1.0, 1.0);
    out.push_back(info("i06_incgamma_variant", printed, zero_t,
                       printed / zero_t,
                       "printed incomplete-gamma force over quadrature-fixed form"));
    const double quad_oracle = force_1d_zero_t_quadrature(a, b, c, d, c1, c2);
    out.push_back(info("i06_zerot_quadrature", quad_oracle, zero_t,
                       rel_dev(quad_oracle, zero_t),
                       "frequency quadrature of the force summand vs closed form"));
  }

  // --- criterion 7: Matsubara vs zero temperature ---------------------------
  {
    QuadratureSpec spec;
    spec.radial_order = 12;
    spec.angular_order = 24;
    const Body s1 = sphere_body(0.1, 0.0, 1.0);
    const Body s2 = sphere_body(0.1, 0.5, 1.0);
    const FieldKind kind = FieldKind::scalar(3);

    ZeroTemperature zt;
    zt.rel_tol = 1e-11;
    const EnergyResult e0 = pair_energy(s1, s2, kind, zt, spec);

    double e[3], tails[3];
    const double temps[3] = {0.1, 0.05, 0.025};
    for (int i = 0; i < 3; ++i) {
      FiniteTemperature ft;
      ft.temperature = temps[i];
      ft.rel_tol = 1e-12;
      const EnergyResult ei = pair_energy(s1, s2, kind, ft, spec);
      e[i] = ei.energy;
      tails[i] = ei.thermal_tail;
    }
    const double r1 = (4.0 * e[1] - e[0]) / 3.0;
    const double r2 = (4.0 * e[2] - e[1]) / 3.0;
    const double extrap = (16.0 * r2 - r1) / 15.0;
    // Combined bound: propagated Matsubara tails, the zero-T quadrature
    // bound, and the standard last-correction estimate of the remaining
    // extrapolation residual.
    const double bound = (64.0 * tails[2] + 20.0 * tails[1] + tails[0]) / 45.0 +
                         e0.thermal_tail + 2.0 * std::abs(r2 - r1) / 15.0 +
                         1e-13 * std::abs(e0.energy);
    CheckResult r;
    r.id = "c07_matsubara_richardson";
    r.engine = extrap;
    r.oracle = e0.energy;
    r.deviation = std::abs(extrap - e0.energy);
    r.tolerance = bound;
    r.status = r.deviation <= r.tolerance ? "PASS" : "FAIL";
    r.note = "Richardson in T^2 vs zero-T value (absolute deviation vs combined bounds)";
    out.push_back(r);

    // Half-weight geometric series against the coth closed form.
    const double T = 0.3, rr = 1.7;
    FiniteTemperature ft;
    ft.temperature = T;
    ft.rel_tol = 1e-14;
    auto f = [rr](double nu) { return std::exp(-2.0 * nu * rr); };
    ThermalReduction red = thermal_reduce(f, ft, 2.0 * rr, ZeroModeWeight::Half);
    const double coth = 0.5 / std::tanh(kTwoPi * T * rr) * T;
    out.push_back(gated("c07_coth_identity", red.value, coth, 1e-10,
                        "half-weight Matsubara sum vs (T/2) coth(2 pi T r)"));

    // Engine finite-T energy against the corrected coth kernel formula.
    FiniteTemperature ft2;
    ft2.temperature = 0.5;
    ft2.rel_tol = 1e-12;
    const EnergyResult et = pair_energy(s1, s2, kind, ft2, spec);
    const NodeSet na = quadrature_nodes(s1, spec);
    const NodeSet nb = quadrature_nodes(s2, spec);
    double corr = 0.0, printed = 0.0;
    for (std::size_t i = 0; i < na.nodes.size(); ++i) {
      for (std::size_t j = 0; j < nb.nodes.size(); ++j) {
        const double dx = na.nodes[i][0] - nb.nodes[j][0];
        const double dy = na.nodes[i][1] - nb.nodes[j][1];
        const double dz = na.nodes[i][2] - nb.nodes[j][2];
        const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
        const double w = na.weights[i] * nb.weights[j] / std::tanh(kTwoPi * 0.5 * dist);
        corr += w / (dist * dist);
        printed += w / dist;
      }
    }
    corr *= -0.5 / (32.0 * kPi * kPi);
    printed *= -0.5 / (32.0 * kPi * kPi);
    out.push_back(gated("c07_coth_formula", et.energy, corr, 1e-10,
                        "engine finite-T energy vs coth/r^2 closed kernel"));
    out.push_back(info("i07_coth_printed_ratio", printed, corr, printed / corr,
                       "printed coth/r variant over corrected coth/r^2"));
  }

  // --- criterion 8: series vs log-det ---------------------------------------
  {
    QuadratureSpec spec;
    spec.radial_order = 4;
    spec.angular_order = 5;  // 20 nodes per shell
    FiniteTemperature ft;
    ft.temperature = 0.5;
    ft.rel_tol = 1e-12;
    for (int pass = 0; pass < 2; ++pass) {
      const FieldKind kind = pass == 0 ? FieldKind::scalar(3) : FieldKind::em();
      // Radii chosen per kind so the n >= 5 truncation tail sits well below
      // the tolerance: the EM near fields strengthen intra-shell couplings
      // on fine shells, so the EM pass uses large shells.
      const double a = pass == 0 ? 0.05 : 2.0;
      std::vector<Body> bodies{sphere_body(a, 0.0, 0.05),
                               sphere_body(a, 8.0 * a, 0.05)};
      const auto series = series_energy(bodies, 4, kind, ft, spec);
      double partial = 0.0;
      for (const auto& term : series) partial += term.energy;
      const EnergyResult ld = logdet_energy(bodies, kind, ft, spec);
      const std::string tag = pass == 0 ? "scalar3" : "em";
      out.push_back(gated("c08_series_logdet_" + tag, partial, ld.energy, 1e-6,
                          "sum of orders 1..4 vs log-det subtraction"));
      const double r32 = std::abs(series[2].energy) / std::abs(series[1].energy);
      const double r43 = std::abs(series[3].energy) / std::abs(series[2].energy);
      CheckResult geo;
      geo.id = "c08_geometric_" + tag;
      geo.engine = r32;
      geo.oracle = r43;
      geo.deviation = std::max(r32, r43);
      geo.tolerance = 1.0;
      geo.status = (r32 < 1.0 && r43 < 1.0) ? "PASS" : "FAIL";
      geo.note = "|E3|/|E2| and |E4|/|E3| both below 1";
      out.push_back(geo);
    }
  }

  // --- criterion 9: large-separation power laws ------------------------------
  {
    QuadratureSpec spec;
    ZeroTemperature zt;
    zt.rel_tol = 1e-11;
    const std::vector<double> rs = log_grid(4.0, 16.0, 5);

    std::vector<double> e_em, e_2d, f_em;
    for (double R : rs) {
      e_em.push_back(pair_energy(point_body(3, 0.0, 1.0), point_body(3, R, 1.0),
                                 FieldKind::em(), zt, spec)
                         .energy);
      e_2d.push_back(pair_energy(point_body(2, 0.0, 1.0), point_body(2, R, 1.0),
                                 FieldKind::scalar(2), zt, spec)
                         .energy);
      TwoBodyScene scene{point_body(3, 0.0, 1.0), point_body(3, R, 1.0),
                         FieldKind::em(), ThermalSpec{zt}, spec};
      f_em.push_back(force(scene, R, 1e-3 * R));
    }
    const double s_em = fit_loglog_slope(rs, e_em);
    const double s_2d = fit_loglog_slope(rs, e_2d);
    const double s_f = fit_loglog_slope(rs, f_em);
    out.push_back(gated("c09_powerlaw_em_energy", s_em, -7.0, 0.01,
                        "log-log slope of the EM pair energy (absolute window)"));
    out.push_back(gated("c09_powerlaw_2d_energy", s_2d, -2.0, 0.01,
                        "log-log slope of the 2D scalar pair energy"));
    out.push_back(gated("c09_powerlaw_em_force", s_f, -8.0, 0.02,
                        "log-log slope of the EM central-difference force"));

    // Finite shells carry the P_-7 correction; report the measured slope
    // against the closed-form prediction over the same window.
    QuadratureSpec shell_spec;
    shell_spec.radial_order = 12;
    shell_spec.angular_order = 24;
    std::vector<double> e_shell, e_closed;
    for (double R : rs) {
      e_shell.push_back(pair_energy(sphere_body(0.25, 0.0, 1.0),
                                    sphere_body(0.25, R, 1.0), FieldKind::em(), zt,
                                    shell_spec)
                            .energy);
      e_closed.push_back(
          energy_em_spheres(SpherePairGeometry(0.25, 0.25, R), 1.0, 1.0, 0.0));
    }
    const double slope_shell = fit_loglog_slope(rs, e_shell);
    const double slope_closed = fit_loglog_slope(rs, e_closed);
    out.push_back(info("i09_em_shell_slope", slope_shell, slope_closed,
                       std::abs(slope_shell - slope_closed),
                       "shell slope vs closed-form slope (P_-7 correction)"));
  }

  // --- criterion 10: Proca --------------------------------------------------
  {
    double worst = 0.0;
    for (double nu : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double em = pair_kernel(FieldKind::em(), nu, r).value;
        const double pr = pair_kernel(FieldKind::proca(0.0), nu, r).value;
        worst = std::max(worst, rel_dev(pr, em));
      }
    }
    CheckResult r0;
    r0.id = "c10_proca_kernel_m0";
    r0.engine = worst;
    r0.deviation = worst;
    r0.tolerance = 1e-12;
    r0.status = worst <= r0.tolerance ? "PASS" : "FAIL";
    r0.note = "max pointwise deviation of the m=0 Proca kernel from EM";
    out.push_back(r0);

    const ProcaSeries s0 = proca_smallvolume_series(1.0, 1.0, 2.0, 1.0, 1.0, 0.0, 5);
    const double dipole = -23.0 / (64.0 * kPi * kPi * kPi * std::pow(2.0, 7));
    out.push_back(gated("c10_proca_series_m0", s0.value, dipole, 1e-14,
                        "mass series at m=0 vs point-dipole value"));

    const ProcaSeries sm = proca_smallvolume_series(1.0, 1.0, 2.0, 1.0, 1.0, 0.05, 2);
    const double first_corr = sm.terms[1];
    CheckResult rs;
    rs.id = "c10_proca_mass_sign";
    rs.engine = first_corr;
    rs.deviation = 0.0;
    rs.tolerance = 0.0;
    rs.status = first_corr > 0.0 ? "PASS" : "FAIL";
    rs.note = "first mass correction is repulsive (reduces attraction)";
    out.push_back(rs);

    // Diagnostic: the printed mass series against direct nu-integration of
    // the Proca kernel over [m, inf) at mR = 0.1.
    const double m = 0.1, R = 1.0;
    auto hz = [m, R](double nu) {
      const double zeta = std::sqrt(std::max(0.0, nu * nu - m * m));
      return em_pair_h(zeta, R);
    };
    QuadratureResult q = integrate_decaying_tail(hz, m, 2.0 * R, 1e-12);
    const double quad = -q.value / kTwoPi;
    const ProcaSeries s5 = proca_smallvolume_series(1.0, 1.0, R, 1.0, 1.0, m, 5);
    out.push_back(info("i10_proca_series_vs_quadrature", s5.value, quad,
                       rel_dev(s5.value, quad),
                       "printed mass series vs nu-integration on [m;inf)"));
  }

  // --- documented discrepancies ----------------------------------------------
  {
    // 2D zero-temperature: frequency-integrated squared-K0 path against the
    // static 1/r^2 branch.
    QuadratureSpec spec;
    spec.angular_order = 128;
    const NodeSet na = quadrature_nodes(ring_body(0.5, 0.0, 1.0), spec);
    const NodeSet nb = quadrature_nodes(ring_body(0.7, 3.0, 1.0), spec);
    std::vector<double> dist;
    std::vector<double> wprod;
    for (std::size_t i = 0; i < na.nodes.size(); ++i) {
      for (std::size_t j = 0; j < nb.nodes.size(); ++j) {
        const double dx = na.nodes[i][0] - nb.nodes[j][0];
        const double dy = na.nodes[i][1] - nb.nodes[j][1];
        dist.push_back(std::hypot(dx, dy));
        wprod.push_back(na.weights[i] * nb.weights[j]);
      }
    }
    auto f36 = [&](double nu) {
      double s = 0.0;
      for (std::size_t k = 0; k < dist.size(); ++k) {
        const double k0 = bessel_k0(nu * dist[k]);
        s += wprod[k] * k0 * k0;
      }
      return s / (4.0 * kPi * kPi);
    };
    ZeroTemperature zt;
    zt.rel_tol = 1e-9;
    ThermalReduction r36 = thermal_reduce(f36, zt, 2.0 * 1.8, ZeroModeWeight::Skip);
    const double e36 = -r36.value;
    const double e38 = pair_energy(ring_body(0.5, 0.0, 1.0), ring_body(0.7, 3.0, 1.0),
                                   FieldKind::scalar(2), zt, spec)
                           .energy;
    out.push_back(info("i_2d_nu_path_over_static", e36, e38, e36 / e38,
                       "frequency-integrated 2D path over static-kernel branch"));
  }
  {
    // Point-like interval formula against the narrow-interval pair energy.
    const double w = 0.02, R = 2.0;
    FiniteTemperature ft;
    ft.temperature = 1.0;
    ft.rel_tol = 1e-13;
    QuadratureSpec spec;
    spec.radial_order = 8;
    Body i1{Interval{-0.5 * w, 0.5 * w}, SusceptibilityModel::constant(1.0)};
    Body i2{Interval{R - 0.5 * w, R + 0.5 * w}, SusceptibilityModel::constant(1.0)};
    const double pair = pair_energy(i1, i2, FieldKind::scalar(1), ft, spec).energy;
    auto pointlike = [&](double nu) {
      return std::exp(-2.0 * nu * R) / (4.0 * nu * nu);
    };
    ThermalReduction red = thermal_reduce(pointlike, ft, 2.0 * R, ZeroModeWeight::Skip);
    const double eq29 = -w * w / 4.0 * red.value;
    out.push_back(info("i_pointlike_prefactor", pair, eq29, pair / eq29,
                       "narrow-interval pair energy over printed point-like form"));
  }
  {
    // Interval cross term in the printed normalization against the
    // first-order pair kernel normalization.
    FiniteTemperature ft;
    ft.temperature = 1.0;
    ft.rel_tol = 1e-13;
    QuadratureSpec spec;
    spec.radial_order = 24;
    const SusceptibilityModel one = SusceptibilityModel::constant(1.0);
    const EnergyResult full = energy_1d_intervals(0.0, 1.0, 2.0, 3.5, one, one, ft);
    const double cross = full.diagnostics.at("cross");
    Body i1{Interval{0.0, 1.0}, one};
    Body i2{Interval{2.0, 3.5}, one};
    const double pair = pair_energy(i1, i2, FieldKind::scalar(1), ft, spec).energy;
    out.push_back(info("i_interval_cross_norm", cross, pair, cross / pair,
                       "printed interval cross term over pair-kernel form"));
  }
  {
    // EM spheres: measured linear-in-T coefficient for half and full zero
    // mode, in units of kB T chi1 chi2 a^2 b^2 P_-6 / R^6 (printed value -6).
    QuadratureSpec spec;
    spec.radial_order = 12;
    spec.angular_order = 24;
    const Body s1 = sphere_body(0.25, 0.0, 1.0);
    const Body s2 = sphere_body(0.25, 2.0, 1.0);
    ZeroTemperature zt;
    zt.rel_tol = 1e-11;
    const double e0 = pair_energy(s1, s2, FieldKind::em(), zt, spec).energy;
    const double unit = std::pow(0.25, 4) * recursion_P(-6, 0.125, 0.125) /
                        std::pow(2.0, 6);
    const double T = 0.02;
    double coef[2];
    for (int pass = 0; pass < 2; ++pass) {
      FiniteTemperature ft;
      ft.temperature = T;
      ft.rel_tol = 1e-13;
      ft.zero_mode = pass == 0 ? ZeroModeWeight::Half : ZeroModeWeight::Full;
      const double et = pair_energy(s1, s2, FieldKind::em(), ft, spec).energy;
      coef[pass] = (et - e0) / (T * unit);
    }
    out.push_back(info("i_em_finite_t_half_coef", coef[0], -6.0, coef[0] / -6.0,
                       "measured linear-T coefficient with half-weight l=0"));
    out.push_back(info("i_em_finite_t_full_coef", coef[1], -6.0, coef[1] / -6.0,
                       "measured linear-T coefficient with full-weight l=0"));
  }

  return out;
}

std::string validate_report_csv(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "id,status,engine,oracle,rel_deviation,tolerance,note\n";
  char buf[512];
  for (const CheckResult& r : results) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%.17g,%.17g,%s\n",
                  r.id.c_str(), r.status.c_str(), r.engine, r.oracle, r.deviation,
                  r.tolerance, r.note.c_str());
    os << buf;
  }
  return os.str();
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (r.status == "FAIL") return false;
  }
  return true;
}

}  // namespace casimir
