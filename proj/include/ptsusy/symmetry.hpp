#pragma once

#include <cstddef>
#include <functional>

#include "ptsusy/grid.hpp"
#include "ptsusy/profiles.hpp"

namespace ptsusy {

inline constexpr double kPtTolerance = 1e-10;

struct SymmetryReport {
  double max_violation = 0.0;
  bool is_pt_symmetric = true;
  std::size_t tested_points = 0;
};

/// max |n(z) - conj(n(-z))| over a closed uniform grid on [-half_width, half_width].
/// Both n(z) and n(-z) are evaluated directly, so no grid reflection error enters.
SymmetryReport pt_check_analytic(const std::function<complex(double)>& index, double half_width,
                                 std::size_t count, double tolerance = kPtTolerance);
SymmetryReport pt_check_analytic(const Profile& p, double half_width, std::size_t count,
                                 double tolerance = kPtTolerance);

/// z -> -z on a grid symmetric about the origin. Throws AsymmetricGrid otherwise.
ComplexField parity_reflect(const ComplexField& field);

/// Complex conjugation, sample by sample.
ComplexField time_reverse(const ComplexField& field);

/// max |field - T P field| for a field sampled on a symmetric grid.
SymmetryReport pt_check_field(const ComplexField& field, double tolerance = kPtTolerance);

}  // namespace ptsusy
