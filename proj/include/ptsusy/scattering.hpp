#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ptsusy/grid.hpp"
#include "ptsusy/profiles.hpp"

namespace ptsusy {

/// A finite grating of whole periods on [0, L] embedded in the background medium.
/// Outside the grating the field is a superposition of exp(+ikz) (rightward) and
/// exp(-ikz) (leftward) waves.
struct GratingSpec {
  Profile profile;
  std::size_t periods = 1;
  double k = 1.0;
  std::size_t steps_per_period = 1024;

  double length() const;
};

void validate(const GratingSpec& g);

/// Fundamental matrix of E'' + k^2 (n/n_bg)^2 E = 0 across [0, L]:
/// (E, E')(L) = M (E, E')(0).
struct TransferMatrix {
  complex m11, m12, m21, m22;

  complex determinant() const { return m11 * m22 - m12 * m21; }
};

TransferMatrix transfer_matrix(const GratingSpec& g);

/// Amplitudes use edge-local phase references: left incidence exp(ikz) + r_left exp(-ikz)
/// for z < 0 and t exp(ik(z-L)) for z > L; right incidence is the mirror image.
struct ScatteringResult {
  complex r_left;
  complex r_right;
  complex t;
  double R_left = 0.0;
  double R_right = 0.0;
  double T = 0.0;
  complex determinant;
};

inline constexpr double kDeterminantTolerance = 1e-6;

ScatteringResult solve_scattering(const GratingSpec& g);

/// solve_scattering for each k, in input order. A failure is rethrown with the
/// offending index in the message.
std::vector<ScatteringResult> detuning_sweep(const GratingSpec& g, std::span<const double> k_values);

}  // namespace ptsusy
