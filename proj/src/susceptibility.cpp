#include "casimir/susceptibility.hpp"

#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

SusceptibilityModel SusceptibilityModel::constant(double chi0) {
  if (!(chi0 >= 0.0)) throw std::invalid_argument("susceptibility: chi0 must be >= 0");
  SusceptibilityModel m;
  m.kind = Kind::Constant;
  m.chi0 = chi0;
  return m;
}

SusceptibilityModel SusceptibilityModel::lorentz(double chi0, double omega0,
                                                 double gamma) {
  if (!(chi0 >= 0.0)) throw std::invalid_argument("susceptibility: chi0 must be >= 0");
  if (!(omega0 > 0.0)) throw std::invalid_argument("susceptibility: omega0 must be > 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("susceptibility: gamma must be >= 0");
  SusceptibilityModel m;
  m.kind = Kind::Lorentz;
  m.chi0 = chi0;
  m.omega0 = omega0;
  m.gamma = gamma;
  return m;
}

double eval_chi_imag(const SusceptibilityModel& model, double nu) {
  if (!(nu >= 0.0)) throw std::domain_error("eval_chi_imag: requires nu >= 0");
  if (model.kind == SusceptibilityModel::Kind::Constant) return model.chi0;
  const double w2 = model.omega0 * model.omega0;
  return model.chi0 * w2 / (w2 + model.gamma * nu + nu * nu);
}

double dielectric_imag(const SusceptibilityModel& model, double nu) {
  return 1.0 + eval_chi_imag(model, nu);
}

double coupling_squared(const SusceptibilityModel& model, double omega) {
  if (!(omega > 0.0)) throw std::domain_error("coupling_squared: requires omega > 0");
  if (model.kind == SusceptibilityModel::Kind::Constant) return 0.0;
  const double w2 = model.omega0 * model.omega0;
  const double d = w2 - omega * omega;
  const double im_chi = model.chi0 * w2 * model.gamma * omega /
                        (d * d + model.gamma * model.gamma * omega * omega);
  return omega / kPi * im_chi;
}

}  // namespace casimir
