#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ptsusy/grid.hpp"
#include "ptsusy/susy_core.hpp"

namespace ptsusy {

// Grid-operator checks of the factorized partner Hamiltonians
//   H(-) = O^dag O,  H(+) = O O^dag,  O = d/dz + W,  O^dag = -d/dz + W.
// Derivatives use centered finite differences of order 2 or 4. Residual norms are
// taken over interior nodes only: every composed stencil application removes
// `stencil_order / 2` nodes at each end.

enum class Boundary { Dirichlet, Periodic };

/// Dirichlet treats samples beyond the grid as zero. Periodic identifies the last
/// node with the first (closed grid spanning exactly one period).
struct DiscreteOperatorSpec {
  ComplexField potential;
  double lambda = 0.0;
  int stencil_order = 2;
  Boundary boundary = Boundary::Dirichlet;

  const Grid& grid() const { return potential.grid(); }
};

void validate(const DiscreteOperatorSpec& spec);

std::size_t stencil_half_width(int stencil_order);

ComplexField first_derivative(const ComplexField& psi, int stencil_order, Boundary boundary);
ComplexField second_derivative(const ComplexField& psi, int stencil_order, Boundary boundary);

/// (-D^2 + V - lambda) psi.
ComplexField apply_hamiltonian(const DiscreteOperatorSpec& spec, const ComplexField& psi);

/// (D + W) psi.
ComplexField apply_annihilator(const Superpotential& w, const ComplexField& psi, int stencil_order,
                               Boundary boundary = Boundary::Dirichlet);
/// (-D + W) psi.
ComplexField apply_creator(const Superpotential& w, const ComplexField& psi, int stencil_order,
                           Boundary boundary = Boundary::Dirichlet);

/// psi0(z) = exp(-int_{z_start}^{z} W dt) from the closed-form antiderivative;
/// psi0(z_start) = 1.
ComplexField ground_state(const Superpotential& w, const Grid& grid);

/// max |values[i]| for layer <= i < size - layer.
double interior_max_abs(std::span<const complex> values, std::size_t layer);

/// max-abs of (H psi - E psi) over the interior. `applications` is how many
/// stencils have already touched psi (1 for a plain sample, 2 for O psi, ...).
double eigen_residual(const DiscreteOperatorSpec& spec, const ComplexField& psi, complex energy,
                      std::size_t applications = 0);

struct ConvergenceReport {
  std::vector<double> spacings;
  std::vector<double> residual_norms;
  /// Least-squares slope of log(residual) against log(h). Zero when every
  /// residual vanishes identically.
  double estimated_order = 0.0;
  bool exact = false;

  bool order_within(double expected, double window = 0.3) const;
  /// True when the finest residual stays above `floor` and the fitted order is
  /// below one half: refinement no longer helps.
  bool plateaus_above(double floor) const;
};

double fit_convergence_order(std::span<const double> spacings, std::span<const double> residuals);

/// (D + W) psi0 on `levels` successively halved grids starting from `coarsest`.
ConvergenceReport annihilation_residual(const Superpotential& w, const Grid& coarsest, int stencil_order,
                                        std::size_t levels = 3);

/// Interior max-abs of (O H(-) - H(+) O) psi with O = D + diag(W) on the fields' grid.
double intertwining_residual(const ComplexField& v_plus, const ComplexField& v_minus, const Superpotential& w,
                             const ComplexField& test_psi, int stencil_order);

/// Same residual under refinement. V(+/-) are built from `w_potentials` while O
/// uses `w_operator`; when they differ the residual has a nonzero continuum limit.
ConvergenceReport intertwining_convergence(const Superpotential& w_operator, const Superpotential& w_potentials,
                                           double lambda, const std::function<complex(double)>& test_psi,
                                           const Grid& coarsest, int stencil_order, std::size_t levels = 3);

/// O psi = psi' + W psi. Maps a solution of H(-) psi = E psi to one of H(+).
ComplexField susy_map_solution(const Superpotential& w, const ComplexField& psi_minus, int stencil_order);
/// O psi with psi' supplied as samples, e.g. the derivative carried by an ODE integrator.
ComplexField susy_map_solution(const Superpotential& w, const ComplexField& psi_minus,
                               const ComplexField& dpsi_minus);

}  // namespace ptsusy
