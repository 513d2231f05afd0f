#include "ptsusy/scattering.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "ptsusy/errors.hpp"
#include "ptsusy/ode.hpp"

namespace ptsusy {

double GratingSpec::length() const { return static_cast<double>(periods) * period(profile); }

void validate(const GratingSpec& g) {
  if (!(g.k > 0.0) || !std::isfinite(g.k)) throw NonPositiveInput("incident wavenumber k must be positive");
  if (g.periods == 0) throw NonPositiveInput("grating needs at least one period");
  if (g.steps_per_period < 64)
    throw InvalidInput("integrator needs at least 64 steps per period, got " + std::to_string(g.steps_per_period));
}

TransferMatrix transfer_matrix(const GratingSpec& g) {
  validate(g);
  const double background = background_index(g.profile);
  const double k2 = g.k * g.k;
  const Coefficient coefficient = [&](double z) {
    const complex ratio = evaluate(g.profile, z) / background;
    return -k2 * ratio * ratio;
  };
  const double length = g.length();
  const std::size_t steps = g.periods * g.steps_per_period;
  const OdeState a = integrate_linear(coefficient, 0.0, length, steps, {1.0, 0.0});
  const OdeState b = integrate_linear(coefficient, 0.0, length, steps, {0.0, 1.0});
  return {a.y, b.y, a.dy, b.dy};
}

ScatteringResult solve_scattering(const GratingSpec& g) {
  const TransferMatrix m = transfer_matrix(g);
  const complex det = m.determinant();
  if (!(std::abs(det - 1.0) <= kDeterminantTolerance)) {
    std::ostringstream msg;
    msg << "transfer matrix determinant " << det << " deviates from 1 by " << std::abs(det - 1.0);
    throw DegenerateTransferMatrix(msg.str());
  }

  // Change to plane-wave amplitudes: (E, E') = P (a, b) with E = a e^{ikz} + b e^{-ikz}
  // at each edge, so the amplitude transfer matrix is P^{-1} M P.
  const complex ik(0.0, g.k);
  const complex p11 = m.m11 + m.m12 * ik;
  const complex p12 = m.m11 - m.m12 * ik;
  const complex p21 = m.m21 + m.m22 * ik;
  const complex p22 = m.m21 - m.m22 * ik;
  const complex a12 = 0.5 * (p12 + p22 / ik);
  const complex a21 = 0.5 * (p11 - p21 / ik);
  const complex a22 = 0.5 * (p12 - p22 / ik);

  if (a22 == 0.0) throw DegenerateTransferMatrix("amplitude transfer element vanishes; no scattering solution");

  ScatteringResult result;
  result.determinant = det;
  result.r_left = -a21 / a22;
  result.r_right = a12 / a22;
  result.t = 1.0 / a22;
  result.R_left = std::norm(result.r_left);
  result.R_right = std::norm(result.r_right);
  result.T = std::norm(result.t);
  if (!std::isfinite(result.R_left) || !std::isfinite(result.R_right) || !std::isfinite(result.T))
    throw ComputationError("scattering amplitudes overflowed");
  return result;
}

std::vector<ScatteringResult> detuning_sweep(const GratingSpec& g, std::span<const double> k_values) {
  std::vector<ScatteringResult> out;
  out.reserve(k_values.size());
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    GratingSpec at = g;
    at.k = k_values[i];
    try {
      out.push_back(solve_scattering(at));
    } catch (const InvalidInput& e) {
      throw InvalidInput("sweep point " + std::to_string(i) + ": " + e.what());
    } catch (const DegenerateTransferMatrix& e) {
      throw DegenerateTransferMatrix("sweep point " + std::to_string(i) + ": " + e.what());
    } catch (const ComputationError& e) {
      throw ComputationError("sweep point " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ptsusy
