#pragma once

namespace ptsusy::gup {

// SI defaults (CODATA 2018). Every function takes them as overridable arguments.
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kReducedPlanck = 1.054571817e-34;   // J s
inline constexpr double kPlanckMass = 2.176434e-8;          // kg
inline constexpr double kElectronMass = 9.1093837015e-31;   // kg

/// Coefficients of the fourth-order expansion
///   i hbar d_t phi = quadratic * p^2/hbar phi + quartic * p^4/hbar^3 phi.
struct DispersionCoefficients {
  double quadratic;
  double quartic;

  /// omega(kappa) for a plane wave with p = hbar kappa.
  double frequency(double kappa) const;
};

/// (c / 2k, c / 8k^3). Throws NonPositiveInput unless k, c > 0.
DispersionCoefficients dispersion_coefficients(double k, double c = kSpeedOfLight);

/// m = hbar k / c, from matching 1/2m against c / (2 hbar k).
double consistency_mass(double k, double c = kSpeedOfLight, double hbar = kReducedPlanck);
/// k = m c / hbar.
double consistency_wavenumber(double mass, double c = kSpeedOfLight, double hbar = kReducedPlanck);

struct GupEstimate {
  double tau;    // 3 / (8 m^2 c^2)
  double tau0;   // m_P^2 c^2 tau = (3/8) (m_P / m)^2
  double mass;
  double planck_mass;
};

GupEstimate tau0_estimate(double mass, double planck_mass = kPlanckMass, double c = kSpeedOfLight);

}  // namespace ptsusy::gup
