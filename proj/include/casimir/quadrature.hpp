#pragma once

#include <functional>
#include <vector>

namespace casimir {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // conservative absolute error estimate
  int evaluations = 0;
  bool converged = true;
};

// Globally adaptive Gauss-Kronrod (G7/K15) on a finite interval. The panel
// budget is generous because power-law tails mapped through the exponential
// substitution refine one endpoint panel per dyadic level.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol = 0.0,
                                    int max_panels = 20000);

// Integral of f over [nu_min, inf) for integrands decaying at least like
// exp(-decay_scale * nu), mapped to a finite interval by u = exp(-s * t).
QuadratureResult integrate_decaying_tail(const std::function<double(double)>& f,
                                         double nu_min, double decay_scale,
                                         double rel_tol);

}  // namespace casimir
