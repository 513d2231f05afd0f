#pragma once

#include <variant>

#include "ptsusy/grid.hpp"

namespace ptsusy {

/// n(z) = n0 (1 + v0 exp(i beta z)).
class PlaneWaveProfile {
 public:
  PlaneWaveProfile(double n0, double v0, double beta);

  double n0() const { return n0_; }
  double v0() const { return v0_; }
  double beta() const { return beta_; }

 private:
  double n0_;
  double v0_;
  double beta_;
};

/// n(z) = eta0 + eta1 cos(2 beta z) + i eta2 sin(2 beta z).
class SinusoidalProfile {
 public:
  SinusoidalProfile(double eta0, double eta1, double eta2, double beta);

  double eta0() const { return eta0_; }
  double eta1() const { return eta1_; }
  double eta2() const { return eta2_; }
  double beta() const { return beta_; }
  double nu1() const { return eta1_ / eta0_; }
  double nu2() const { return eta2_ / eta0_; }

 private:
  double eta0_;
  double eta1_;
  double eta2_;
  double beta_;
};

using Profile = std::variant<PlaneWaveProfile, SinusoidalProfile>;

/// Wavenumber k, incident energy epsilon and cut-off energy lambda.
struct SusyParams {
  double k = 1.0;
  double epsilon = 1.0;
  double lambda = 0.0;
};

complex eval_plane_wave(const PlaneWaveProfile& p, double z);
complex eval_sinusoidal(const SinusoidalProfile& p, double z);
complex evaluate(const Profile& p, double z);

ComplexField sample(const Profile& p, const Grid& grid);

/// n0 for family A, eta0 for family B.
double background_index(const Profile& p);

/// Spatial period: 2 pi / |beta| (plane wave) or pi / |beta| (sinusoidal).
double period(const Profile& p);

/// max over z of |v(z)| where n = n_bg (1 + v).
double max_perturbation(const Profile& p);

/// The profile with the perturbation sign flipped, n_bg (1 - v(z)).
Profile negated_perturbation(const Profile& p);

}  // namespace ptsusy
