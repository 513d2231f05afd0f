#include "ptsusy/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ptsusy/errors.hpp"

namespace ptsusy {

namespace {

struct Stencil {
  std::array<double, 5> weights;  // offsets -2..2
  int power;                      // divide by h^power
  double denominator;
};

Stencil first_stencil(int order) {
  if (order == 2) return {{0.0, -1.0, 0.0, 1.0, 0.0}, 1, 2.0};
  return {{1.0, -8.0, 0.0, 8.0, -1.0}, 1, 12.0};
}

Stencil second_stencil(int order) {
  if (order == 2) return {{0.0, 1.0, -2.0, 1.0, 0.0}, 2, 1.0};
  return {{-1.0, 16.0, -30.0, 16.0, -1.0}, 2, 12.0};
}

void require_order(int order) {
  if (order != 2 && order != 4)
    throw InvalidInput("stencil order must be 2 or 4, got " + std::to_string(order));
}

ComplexField apply_stencil(const ComplexField& psi, const Stencil& s, Boundary boundary) {
  const Grid& grid = psi.grid();
  const auto n = static_cast<long>(grid.count());
  const long period = n - 1;
  if (boundary == Boundary::Periodic && period < 4)
    throw InvalidInput("periodic stencils need at least 5 grid nodes");
  const double scale = s.denominator * std::pow(grid.spacing(), s.power);
  std::vector<complex> out(grid.count());
  for (long i = 0; i < n; ++i) {
    complex acc = 0.0;
    for (long o = -2; o <= 2; ++o) {
      const double weight = s.weights[static_cast<std::size_t>(o + 2)];
      if (weight == 0.0) continue;
      long j = i + o;
      if (boundary == Boundary::Periodic) {
        j = ((j % period) + period) % period;
      } else if (j < 0 || j >= n) {
        continue;
      }
      acc += weight * psi[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = acc / scale;
  }
  return ComplexField(grid, std::move(out));
}

ComplexField sample_w(const Superpotential& w, const Grid& grid) {
  return sample_function(grid, [&w](double z) { return w.value(z); });
}

ComplexField combine(const ComplexField& a, complex sa, const ComplexField& b, complex sb) {
  require_same_grid(a, b);
  std::vector<complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sa * a[i] + sb * b[i];
  return ComplexField(a.grid(), std::move(out));
}

ComplexField multiply(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a, b);
  std::vector<complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return ComplexField(a.grid(), std::move(out));
}

// -D^2 psi + v psi, with v carrying any constant shift already.
ComplexField schroedinger(const ComplexField& v, const ComplexField& psi, int order) {
  return combine(multiply(v, psi), 1.0, second_derivative(psi, order, Boundary::Dirichlet), -1.0);
}

}  // namespace

void validate(const DiscreteOperatorSpec& spec) {
  require_order(spec.stencil_order);
  if (!std::isfinite(spec.lambda)) throw InvalidInput("lambda must be finite");
  if (spec.boundary == Boundary::Periodic) {
    const auto values = spec.potential.values();
    const double scale = std::max(1.0, std::abs(values.front()));
    if (std::abs(values.front() - values.back()) > 1e-10 * scale)
      throw InvalidInput("periodic boundary requires the potential to be periodic on the grid window");
  }
}

std::size_t stencil_half_width(int stencil_order) {
  require_order(stencil_order);
  return static_cast<std::size_t>(stencil_order / 2);
}

ComplexField first_derivative(const ComplexField& psi, int stencil_order, Boundary boundary) {
  require_order(stencil_order);
  return apply_stencil(psi, first_stencil(stencil_order), boundary);
}

ComplexField second_derivative(const ComplexField& psi, int stencil_order, Boundary boundary) {
  require_order(stencil_order);
  return apply_stencil(psi, second_stencil(stencil_order), boundary);
}

ComplexField apply_hamiltonian(const DiscreteOperatorSpec& spec, const ComplexField& psi) {
  validate(spec);
  require_same_grid(spec.potential, psi);
  const ComplexField d2 = second_derivative(psi, spec.stencil_order, spec.boundary);
  std::vector<complex> out(psi.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -d2[i] + (spec.potential[i] - spec.lambda) * psi[i];
  return ComplexField(psi.grid(), std::move(out));
}

ComplexField apply_annihilator(const Superpotential& w, const ComplexField& psi, int stencil_order,
                               Boundary boundary) {
  return combine(first_derivative(psi, stencil_order, boundary), 1.0, multiply(sample_w(w, psi.grid()), psi), 1.0);
}

ComplexField apply_creator(const Superpotential& w, const ComplexField& psi, int stencil_order,
                           Boundary boundary) {
  return combine(first_derivative(psi, stencil_order, boundary), -1.0, multiply(sample_w(w, psi.grid()), psi), 1.0);
}

ComplexField ground_state(const Superpotential& w, const Grid& grid) {
  const complex origin = w.antiderivative(grid.z_start());
  return sample_function(grid, [&](double z) { return std::exp(-(w.antiderivative(z) - origin)); });
}

double interior_max_abs(std::span<const complex> values, std::size_t layer) {
  double out = 0.0;
  for (std::size_t i = layer; i + layer < values.size(); ++i) out = std::max(out, std::abs(values[i]));
  return out;
}

double eigen_residual(const DiscreteOperatorSpec& spec, const ComplexField& psi, complex energy,
                      std::size_t applications) {
  const ComplexField h_psi = apply_hamiltonian(spec, psi);
  const ComplexField residual = combine(h_psi, 1.0, psi, -energy);
  const std::size_t layer =
      spec.boundary == Boundary::Periodic ? 0 : stencil_half_width(spec.stencil_order) * (applications + 1);
  return interior_max_abs(residual.values(), layer);
}

bool ConvergenceReport::order_within(double expected, double window) const {
  return !exact && std::abs(estimated_order - expected) <= window;
}

bool ConvergenceReport::plateaus_above(double floor) const {
  return !residual_norms.empty() && residual_norms.back() > floor && estimated_order < 0.5;
}

double fit_convergence_order(std::span<const double> spacings, std::span<const double> residuals) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < std::min(spacings.size(), residuals.size()); ++i) {
    if (!(residuals[i] > 0.0)) continue;
    const double x = std::log(spacings[i]);
    const double y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

namespace {

template <typename ResidualAt>
ConvergenceReport refine(const Grid& coarsest, std::size_t levels, ResidualAt&& residual_at) {
  if (levels < 3) throw InvalidInput("convergence study needs at least 3 refinement levels");
  ConvergenceReport report;
  Grid grid = coarsest;
  for (std::size_t level = 0; level < levels; ++level) {
    report.spacings.push_back(grid.spacing());
    report.residual_norms.push_back(residual_at(grid));
    grid = grid.refined();
  }
  report.exact = std::all_of(report.residual_norms.begin(), report.residual_norms.end(),
                             [](double r) { return r == 0.0; });
  report.estimated_order = fit_convergence_order(report.spacings, report.residual_norms);
  return report;
}

}  // namespace

ConvergenceReport annihilation_residual(const Superpotential& w, const Grid& coarsest, int stencil_order,
                                        std::size_t levels) {
  const std::size_t layer = stencil_half_width(stencil_order);
  return refine(coarsest, levels, [&](const Grid& grid) {
    const ComplexField psi0 = ground_state(w, grid);
    return interior_max_abs(apply_annihilator(w, psi0, stencil_order).values(), layer);
  });
}

double intertwining_residual(const ComplexField& v_plus, const ComplexField& v_minus, const Superpotential& w,
                             const ComplexField& test_psi, int stencil_order) {
  require_same_grid(v_plus, v_minus);
  require_same_grid(v_plus, test_psi);
  // The constant cut-off in H(+/-) = -D^2 + V(+/-) - lambda cancels between the two sides.
  const ComplexField lhs = apply_annihilator(w, schroedinger(v_minus, test_psi, stencil_order), stencil_order);
  const ComplexField rhs = schroedinger(v_plus, apply_annihilator(w, test_psi, stencil_order), stencil_order);
  const ComplexField residual = combine(lhs, 1.0, rhs, -1.0);
  return interior_max_abs(residual.values(), 2 * stencil_half_width(stencil_order));
}

ConvergenceReport intertwining_convergence(const Superpotential& w_operator, const Superpotential& w_potentials,
                                           double lambda, const std::function<complex(double)>& test_psi,
                                           const Grid& coarsest, int stencil_order, std::size_t levels) {
  SusyParams sp;
  sp.lambda = lambda;
  return refine(coarsest, levels, [&](const Grid& grid) {
    const PartnerPotentials v = partner_potentials(w_potentials, sp, grid);
    return intertwining_residual(v.v_plus, v.v_minus, w_operator, sample_function(grid, test_psi), stencil_order);
  });
}

ComplexField susy_map_solution(const Superpotential& w, const ComplexField& psi_minus, int stencil_order) {
  return apply_annihilator(w, psi_minus, stencil_order);
}

ComplexField susy_map_solution(const Superpotential& w, const ComplexField& psi_minus,
                               const ComplexField& dpsi_minus) {
  return combine(dpsi_minus, 1.0, multiply(sample_w(w, psi_minus.grid()), psi_minus), 1.0);
}

}  // namespace ptsusy
