#include "ptsusy/susy_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "overloaded.hpp"
#include "ptsusy/errors.hpp"

namespace ptsusy {

using detail::overloaded;

namespace {

constexpr double kMatchingRelTol = 1e-12;

bool close_relative(double a, double b, double scale) {
  return std::abs(a - b) <= kMatchingRelTol * std::max(scale, 1e-300);
}

void require_k(const SusyParams& sp) {
  if (!std::isfinite(sp.k) || sp.k == 0.0) throw InvalidInput("wavenumber k must be finite and nonzero");
  if (!std::isfinite(sp.epsilon) || !std::isfinite(sp.lambda))
    throw InvalidInput("epsilon and lambda must be finite");
}

void check_beta(double beta, double expected_abs, const char* relation) {
  if (!close_relative(std::abs(beta), expected_abs, std::max(std::abs(beta), expected_abs))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "matching condition " << relation << " violated: |beta| = " << std::abs(beta)
        << ", expected " << expected_abs << " (deviation " << std::abs(std::abs(beta) - expected_abs) << ")";
    throw MatchingConditionViolated(msg.str());
  }
}

void check_energy(const SusyParams& sp, double target, const char* relation) {
  const double lhs = sp.epsilon - sp.lambda;
  const double scale = std::max({std::abs(target), std::abs(sp.epsilon), std::abs(sp.lambda), sp.k * sp.k});
  if (!close_relative(lhs, target, scale)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy condition " << relation << " violated: eps - lambda = " << lhs << ", expected " << target
        << " (deviation " << std::abs(lhs - target) << ")";
    throw EnergyMismatch(msg.str());
  }
}

}  // namespace

Family family_of(const Profile& p) {
  return std::holds_alternative<PlaneWaveProfile>(p) ? Family::PlaneWave : Family::Sinusoidal;
}

Superpotential::Superpotential(Family family, double f_amplitude, double g_amplitude, double beta)
    : family_(family), f_amplitude_(f_amplitude), g_amplitude_(g_amplitude), beta_(beta) {
  if (!std::isfinite(beta) || beta == 0.0) throw InvalidInput("superpotential beta must be finite and nonzero");
  if (!std::isfinite(f_amplitude) || !std::isfinite(g_amplitude))
    throw InvalidInput("superpotential amplitudes must be finite");
}

Superpotential Superpotential::plane_wave(double v0, double beta) {
  return {Family::PlaneWave, -beta * v0 / 2.0, beta * v0 / 2.0, beta};
}

Superpotential Superpotential::sinusoidal(double nu1, double nu2, double beta) {
  return {Family::Sinusoidal, -nu1 * beta, nu2 * beta, beta};
}

complex Superpotential::value(double z) const {
  const double theta = harmonic() * beta_ * z;
  return {f_amplitude_ * std::sin(theta), g_amplitude_ * std::cos(theta)};
}

complex Superpotential::derivative(double z) const {
  const double rate = harmonic() * beta_;
  const double theta = rate * z;
  return {rate * f_amplitude_ * std::cos(theta), -rate * g_amplitude_ * std::sin(theta)};
}

complex Superpotential::antiderivative(double z) const {
  const double rate = harmonic() * beta_;
  const double theta = rate * z;
  return {-f_amplitude_ * std::cos(theta) / rate, g_amplitude_ * std::sin(theta) / rate};
}

Superpotential Superpotential::negated() const { return {family_, -f_amplitude_, -g_amplitude_, beta_}; }

WValue eval_W(const Superpotential& w, double z) { return {w.value(z), w.derivative(z)}; }

double matched_beta(Family family, double k) { return family == Family::PlaneWave ? 2.0 * k : k; }

double matched_k(const Profile& p) {
  return std::visit(overloaded{[](const PlaneWaveProfile& a) { return a.beta() / 2.0; },
                               [](const SinusoidalProfile& b) { return b.beta(); }},
                    p);
}

double matched_epsilon(const Profile& p, double k, double lambda) {
  return std::visit(overloaded{[&](const PlaneWaveProfile&) { return k * k + lambda; },
                               [&](const SinusoidalProfile& b) {
                                 return k * k * (1.0 + b.nu1() * b.nu1() - b.nu2() * b.nu2()) + lambda;
                               }},
                    p);
}

void check_matching(const Profile& p, const SusyParams& sp) {
  require_k(sp);
  std::visit(overloaded{[&](const PlaneWaveProfile& a) {
                          check_beta(a.beta(), 2.0 * std::abs(sp.k), "beta = +/-2k");
                          check_energy(sp, sp.k * sp.k, "k^2 = eps - lambda");
                        },
                        [&](const SinusoidalProfile& b) {
                          check_beta(b.beta(), std::abs(sp.k), "beta = +/-k");
                          check_energy(sp, sp.k * sp.k * (1.0 + b.nu1() * b.nu1() - b.nu2() * b.nu2()),
                                       "eps - lambda = k^2 (1 + nu1^2 - nu2^2)");
                        }},
             p);
}

Superpotential build_superpotential_A(const PlaneWaveProfile& p, const SusyParams& sp) {
  check_matching(p, sp);
  return Superpotential::plane_wave(p.v0(), p.beta());
}

Superpotential build_superpotential_B(const SinusoidalProfile& p, const SusyParams& sp) {
  check_matching(p, sp);
  return Superpotential::sinusoidal(p.nu1(), p.nu2(), p.beta());
}

Superpotential build_superpotential(const Profile& p, const SusyParams& sp) {
  return std::visit(
      overloaded{[&](const PlaneWaveProfile& a) { return build_superpotential_A(a, sp); },
                 [&](const SinusoidalProfile& b) { return build_superpotential_B(b, sp); }},
      p);
}

PartnerPotentials partner_potentials(const Superpotential& w, const SusyParams& sp, const Grid& grid) {
  std::vector<complex> plus(grid.count());
  std::vector<complex> minus(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const auto [value, slope] = eval_W(w, grid.node(i));
    const complex square = value * value;
    plus[i] = square + slope + sp.lambda;
    minus[i] = square - slope + sp.lambda;
  }
  return {ComplexField(grid, std::move(plus)), ComplexField(grid, std::move(minus))};
}

ComplexField partner_index_minus(const Profile& p, const SusyParams& sp, const Grid& grid) {
  check_matching(p, sp);
  return sample(negated_perturbation(p), grid);
}

PartnerSet build_partner_set(const Profile& p, const SusyParams& sp, const Grid& grid) {
  const Superpotential w = build_superpotential(p, sp);
  auto potentials = partner_potentials(w, sp, grid);
  return PartnerSet{sample(p, grid), sample(negated_perturbation(p), grid), std::move(potentials.v_plus),
                    std::move(potentials.v_minus), sp, background_index(p)};
}

ResidualReport summarize_residual(const Grid& grid, std::span<const complex> residual, double tolerance) {
  ResidualReport report;
  report.tolerance = tolerance;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const double mag = std::abs(residual[i]);
    sum_sq += mag * mag;
    if (mag > report.max_abs_residual || i == 0) {
      report.max_abs_residual = mag;
      report.location_of_max = grid.node(i);
    }
  }
  report.rms_residual = residual.empty() ? 0.0 : std::sqrt(sum_sq / static_cast<double>(residual.size()));
  report.pass = report.max_abs_residual <= tolerance;
  return report;
}

ResidualReport riccati_residual(const Profile& p, const Superpotential& w, const SusyParams& sp, Sign sign,
                                const Grid& grid, double tolerance) {
  const Profile index = sign == Sign::Plus ? p : negated_perturbation(p);
  const double background = background_index(p);
  const double k2 = sp.k * sp.k;
  const double s = sign == Sign::Plus ? 1.0 : -1.0;
  std::vector<complex> residual(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double z = grid.node(i);
    const complex ratio = evaluate(index, z) / background;
    const auto [value, slope] = eval_W(w, z);
    residual[i] = k2 * ratio * ratio - (sp.epsilon - sp.lambda - (value * value + s * slope));
  }
  return summarize_residual(grid, residual, tolerance);
}

ResidualReport partner_sum_check(const PartnerSet& ps, double tolerance) {
  require_same_grid(ps.n_plus, ps.n_minus);
  std::vector<complex> residual(ps.n_plus.size());
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] = ps.n_plus[i] + ps.n_minus[i] - 2.0 * ps.background;
  return summarize_residual(ps.n_plus.grid(), residual, tolerance);
}

ResidualReport index_potential_consistency(const PartnerSet& ps, Sign sign, double tolerance) {
  const ComplexField& n = sign == Sign::Plus ? ps.n_plus : ps.n_minus;
  const ComplexField& v = sign == Sign::Plus ? ps.v_plus : ps.v_minus;
  require_same_grid(n, v);
  const double k2 = ps.params.k * ps.params.k;
  std::vector<complex> residual(n.size());
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const complex ratio = n[i] / ps.background;
    residual[i] = v[i] - (ps.params.epsilon - k2 * ratio * ratio);
  }
  return summarize_residual(n.grid(), residual, tolerance);
}

}  // namespace ptsusy
