#include "ptsusy/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "overloaded.hpp"
#include "ptsusy/errors.hpp"

namespace ptsusy {

namespace {

void require_beta(double beta) {
  if (!std::isfinite(beta) || beta == 0.0) throw InvalidInput("beta must be finite and nonzero");
}

}  // namespace

using detail::overloaded;

PlaneWaveProfile::PlaneWaveProfile(double n0, double v0, double beta)
    : n0_(n0), v0_(v0), beta_(beta) {
  if (!(n0 > 0.0) || !std::isfinite(n0)) throw NonPositiveInput("n0 must be positive");
  if (!std::isfinite(v0)) throw InvalidInput("v0 must be finite");
  require_beta(beta);
}

SinusoidalProfile::SinusoidalProfile(double eta0, double eta1, double eta2, double beta)
    : eta0_(eta0), eta1_(eta1), eta2_(eta2), beta_(beta) {
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) throw NonPositiveInput("eta0 must be positive");
  if (!std::isfinite(eta1) || !std::isfinite(eta2)) throw InvalidInput("eta1, eta2 must be finite");
  require_beta(beta);
  if (!std::isfinite(nu1()) || !std::isfinite(nu2()))
    throw InvalidInput("index contrast ratios eta1/eta0, eta2/eta0 overflow");
}

complex eval_plane_wave(const PlaneWaveProfile& p, double z) {
  const double phase = p.beta() * z;
  return p.n0() * complex(1.0 + p.v0() * std::cos(phase), p.v0() * std::sin(phase));
}

complex eval_sinusoidal(const SinusoidalProfile& p, double z) {
  const double phase = 2.0 * p.beta() * z;
  return {p.eta0() + p.eta1() * std::cos(phase), p.eta2() * std::sin(phase)};
}

complex evaluate(const Profile& p, double z) {
  return std::visit(overloaded{[z](const PlaneWaveProfile& a) { return eval_plane_wave(a, z); },
                               [z](const SinusoidalProfile& b) { return eval_sinusoidal(b, z); }},
                    p);
}

ComplexField sample(const Profile& p, const Grid& grid) {
  return sample_function(grid, [&p](double z) { return evaluate(p, z); });
}

double background_index(const Profile& p) {
  return std::visit(overloaded{[](const PlaneWaveProfile& a) { return a.n0(); },
                               [](const SinusoidalProfile& b) { return b.eta0(); }},
                    p);
}

double period(const Profile& p) {
  return std::visit(
      overloaded{[](const PlaneWaveProfile& a) { return 2.0 * std::numbers::pi / std::abs(a.beta()); },
                 [](const SinusoidalProfile& b) { return std::numbers::pi / std::abs(b.beta()); }},
      p);
}

double max_perturbation(const Profile& p) {
  // |nu1 cos t + i nu2 sin t| peaks at t = 0 or t = pi/2.
  return std::visit(
      overloaded{[](const PlaneWaveProfile& a) { return std::abs(a.v0()); },
                 [](const SinusoidalProfile& b) { return std::max(std::abs(b.nu1()), std::abs(b.nu2())); }},
      p);
}

Profile negated_perturbation(const Profile& p) {
  return std::visit(overloaded{[](const PlaneWaveProfile& a) -> Profile {
                                 return PlaneWaveProfile(a.n0(), -a.v0(), a.beta());
                               },
                               [](const SinusoidalProfile& b) -> Profile {
                                 return SinusoidalProfile(b.eta0(), -b.eta1(), -b.eta2(), b.beta());
                               }},
                    p);
}

}  // namespace ptsusy
