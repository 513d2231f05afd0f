#pragma once

#include <span>

#include "ptsusy/grid.hpp"
#include "ptsusy/profiles.hpp"

namespace ptsusy {

enum class Family { PlaneWave, Sinusoidal };

enum class Sign { Plus, Minus };

Family family_of(const Profile& p);

/// Closed-form complex superpotential W = f + i g with
///   f(z) = f_amplitude sin(m beta z),  g(z) = g_amplitude cos(m beta z),
/// where m = 1 for the plane-wave family and m = 2 for the sinusoidal one.
class Superpotential {
 public:
  Superpotential(Family family, double f_amplitude, double g_amplitude, double beta);

  /// W for n0(1 + v0 e^{i beta z}) without checking any matching condition.
  static Superpotential plane_wave(double v0, double beta);
  /// W for eta0(1 + nu1 cos 2 beta z + i nu2 sin 2 beta z), unchecked.
  static Superpotential sinusoidal(double nu1, double nu2, double beta);

  Family family() const { return family_; }
  double f_amplitude() const { return f_amplitude_; }
  double g_amplitude() const { return g_amplitude_; }
  double beta() const { return beta_; }
  int harmonic() const { return family_ == Family::PlaneWave ? 1 : 2; }

  complex value(double z) const;
  complex derivative(double z) const;
  /// Antiderivative with zero integration constant.
  complex antiderivative(double z) const;

  /// -W. Swaps the roles of V+ and V-.
  Superpotential negated() const;

 private:
  Family family_;
  double f_amplitude_;
  double g_amplitude_;
  double beta_;
};

struct WValue {
  complex w;
  complex w_prime;
};

WValue eval_W(const Superpotential& w, double z);

/// Matched beta for a given k on the default (+) branch: 2k or k.
double matched_beta(Family family, double k);
/// Matched k for the profile's beta on the default (+) branch.
double matched_k(const Profile& p);
/// epsilon that satisfies the energy matching condition for the family.
double matched_epsilon(const Profile& p, double k, double lambda);

/// Throws MatchingConditionViolated / EnergyMismatch if sp is not matched to p.
void check_matching(const Profile& p, const SusyParams& sp);

Superpotential build_superpotential_A(const PlaneWaveProfile& p, const SusyParams& sp);
Superpotential build_superpotential_B(const SinusoidalProfile& p, const SusyParams& sp);
Superpotential build_superpotential(const Profile& p, const SusyParams& sp);

struct PartnerPotentials {
  ComplexField v_plus;
  ComplexField v_minus;
};

/// V(+/-) = W^2 +/- W' + lambda on the grid.
PartnerPotentials partner_potentials(const Superpotential& w, const SusyParams& sp, const Grid& grid);

/// n(-) = n_bg (1 - v(z)). Validates the matching conditions first.
ComplexField partner_index_minus(const Profile& p, const SusyParams& sp, const Grid& grid);

struct PartnerSet {
  ComplexField n_plus;
  ComplexField n_minus;
  ComplexField v_plus;
  ComplexField v_minus;
  SusyParams params;
  double background;
};

PartnerSet build_partner_set(const Profile& p, const SusyParams& sp, const Grid& grid);

struct ResidualReport {
  double max_abs_residual = 0.0;
  double rms_residual = 0.0;
  double location_of_max = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

ResidualReport summarize_residual(const Grid& grid, std::span<const complex> residual, double tolerance);

inline constexpr double kIdentityTolerance = 1e-10;
inline constexpr double kSamplingTolerance = 1e-12;

/// r(z) = k^2 (n(sign)/n_bg)^2 - [eps - lambda - (W^2 +/- W')]. The upper sign
/// pairs with the profile itself, the lower sign with its partner n(-).
ResidualReport riccati_residual(const Profile& p, const Superpotential& w, const SusyParams& sp, Sign sign,
                                const Grid& grid, double tolerance = kIdentityTolerance);

/// n+ + n- - 2 n_bg.
ResidualReport partner_sum_check(const PartnerSet& ps, double tolerance = kSamplingTolerance);

/// V(sign) - (eps - k^2 (n(sign)/n_bg)^2), the Helmholtz-to-Schroedinger map.
ResidualReport index_potential_consistency(const PartnerSet& ps, Sign sign,
                                           double tolerance = kIdentityTolerance);

}  // namespace ptsusy
