#include "ptsusy/gup.hpp"

#include <cmath>
#include <string>

#include "ptsusy/errors.hpp"

namespace ptsusy::gup {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw NonPositiveInput(std::string(name) + " must be positive and finite");
}

}  // namespace

double DispersionCoefficients::frequency(double kappa) const {
  const double k2 = kappa * kappa;
  return quadratic * k2 + quartic * k2 * k2;
}

DispersionCoefficients dispersion_coefficients(double k, double c) {
  require_positive(k, "k");
  require_positive(c, "c");
  return {c / (2.0 * k), c / (8.0 * k * k * k)};
}

double consistency_mass(double k, double c, double hbar) {
  require_positive(k, "k");
  require_positive(c, "c");
  require_positive(hbar, "hbar");
  return hbar * k / c;
}

double consistency_wavenumber(double mass, double c, double hbar) {
  require_positive(mass, "mass");
  require_positive(c, "c");
  require_positive(hbar, "hbar");
  return mass * c / hbar;
}

GupEstimate tau0_estimate(double mass, double planck_mass, double c) {
  require_positive(mass, "mass");
  require_positive(planck_mass, "planck mass");
  require_positive(c, "c");
  const double ratio = planck_mass / mass;
  const double mc = mass * c;
  return {0.375 / (mc * mc), 0.375 * ratio * ratio, mass, planck_mass};
}

}  // namespace ptsusy::gup
