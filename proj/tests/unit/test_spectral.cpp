#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ptsusy/errors.hpp"
#include "ptsusy/ode.hpp"
#include "ptsusy/spectral.hpp"
#include "support/oracles.hpp"

using namespace ptsusy;
using std::numbers::pi;

namespace {

const Superpotential kFamilyA = Superpotential::plane_wave(1, 2);
const Superpotential kFamilyB = Superpotential::sinusoidal(4, 2, 1);

ComplexField zeros(const Grid& g) { return ComplexField(g, std::vector<complex>(g.count())); }

struct Integrated {
  ComplexField psi;
  ComplexField dpsi;
};

// H(-) psi = E psi as psi'' = (V(-) - lambda - E) psi, V(-) - lambda = W^2 - W'.
Integrated integrate_minus(const Superpotential& w, const Grid& g, double energy) {
  const auto states = integrate_on_grid(
      [&](double z) {
        const auto [value, slope] = eval_W(w, z);
        return value * value - slope - energy;
      },
      g, 32, {1.0, 0.0});
  std::vector<complex> psi, dpsi;
  for (const auto& s : states) {
    psi.push_back(s.y);
    dpsi.push_back(s.dy);
  }
  return {ComplexField(g, psi), ComplexField(g, dpsi)};
}

}  // namespace

TEST(Spectral, FreeParticleEigenfunction) {
  const double length = 2.0;
  double previous = 0;
  for (std::size_t n : {101u, 201u}) {
    const Grid g(0, length, n);
    const ComplexField psi = sample_function(g, [&](double z) { return std::sin(pi * z / length); });
    const ComplexField h = apply_hamiltonian({zeros(g), 0.0, 2, Boundary::Dirichlet}, psi);
    std::vector<complex> diff(g.count());
    for (std::size_t i = 0; i < g.count(); ++i) diff[i] = h[i] - (pi / length) * (pi / length) * psi[i];
    const double err = interior_max_abs(diff, 1);
    EXPECT_LE(err, 2.0 * g.spacing() * g.spacing());
    if (previous > 0) EXPECT_NEAR(previous / err, 4.0, 0.1);
    previous = err;
  }
}

TEST(Spectral, ConstantFunctionPeriodic) {
  const Grid g(0, 1, 33);
  const complex c(0.7, -0.2);
  const ComplexField v(g, std::vector<complex>(g.count(), c));
  const ComplexField psi(g, std::vector<complex>(g.count(), complex(2, 1)));
  for (int order : {2, 4}) {
    const ComplexField h = apply_hamiltonian({v, 0.0, order, Boundary::Periodic}, psi);
    for (std::size_t i = 0; i < g.count(); ++i) EXPECT_NEAR(std::abs(h[i] - c * psi[i]), 0, 1e-10);
  }
}

TEST(Spectral, PeriodicStencilMatchesAnalyticDerivative) {
  const Grid g(0, 2 * pi, 129);
  const ComplexField psi = sample_function(g, [](double z) { return std::exp(complex(0, 3 * z)); });
  const ComplexField d = first_derivative(psi, 4, Boundary::Periodic);
  for (std::size_t i = 0; i < g.count(); ++i)
    EXPECT_NEAR(std::abs(d[i] - complex(0, 3) * psi[i]), 0, 1e-4);
}

TEST(Spectral, RejectsInvalidSpecs) {
  const Grid g(0, 1, 11);
  const ComplexField ramp = sample_function(g, [](double z) { return complex(z, 0); });
  EXPECT_THROW(apply_hamiltonian({ramp, 0.0, 2, Boundary::Periodic}, ramp), InvalidInput);
  EXPECT_THROW(apply_hamiltonian({ramp, 0.0, 3, Boundary::Dirichlet}, ramp), InvalidInput);
  EXPECT_THROW(apply_hamiltonian({ramp, 0.0, 2, Boundary::Dirichlet}, zeros(Grid(0, 1, 12))), GridMismatch);
  EXPECT_THROW(intertwining_residual(ramp, ramp, kFamilyA, zeros(Grid(0, 2, 11)), 2), GridMismatch);
}

TEST(Spectral, GroundStateValues) {
  const Grid g(0, pi / 2, 3);
  const ComplexField psi = ground_state(kFamilyA, g);
  EXPECT_EQ(psi[0], complex(1, 0));
  // Reference from quadrature of W over [0, pi/2].
  const complex integral = oracle::integrate([](double t) { return kFamilyA.value(t); }, 0, pi / 2);
  EXPECT_NEAR(std::abs(integral - complex(-1, 0)), 0, 1e-12);
  EXPECT_NEAR(psi[2].real(), std::exp(1.0), 1e-12);
  EXPECT_NEAR(psi[2].imag(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(psi[2] - std::exp(-integral)), 0, 1e-11);

  const ComplexField flat = ground_state(Superpotential::plane_wave(0, 2), Grid(-1, 3, 9));
  for (const auto& v : flat.values()) EXPECT_EQ(v, complex(1, 0));
}

TEST(Spectral, GroundStateIsAnnihilatedByHminus) {
  // H(-) psi0 = 0 up to discretization error of the stencil order.
  for (int order : {2, 4}) {
    std::vector<double> h, r;
    for (std::size_t n : {101u, 201u, 401u}) {
      const Grid g(0, pi, n);
      const auto v = partner_potentials(kFamilyA, {1, 1, 0}, g);
      r.push_back(eigen_residual({v.v_minus, 0.0, order, Boundary::Dirichlet}, ground_state(kFamilyA, g), 0.0));
      h.push_back(g.spacing());
    }
    EXPECT_NEAR(fit_convergence_order(h, r), order, 0.3);
  }
}

TEST(Spectral, AnnihilationConvergesAtStencilOrder) {
  for (const Superpotential& w : {kFamilyA, kFamilyB}) {
    // One period is pi for both (beta = 2 plane wave, beta = 1 sinusoid).
    const ConvergenceReport second = annihilation_residual(w, Grid(0, pi, 101), 2);
    EXPECT_EQ(second.spacings.size(), 3u);
    EXPECT_GE(second.estimated_order, 1.7);
    EXPECT_LE(second.estimated_order, 2.3);
    const ConvergenceReport fourth = annihilation_residual(w, Grid(0, pi, 101), 4, 4);
    EXPECT_TRUE(fourth.order_within(4.0)) << fourth.estimated_order;
  }
  const ConvergenceReport zero = annihilation_residual(Superpotential::plane_wave(0, 2), Grid(0, pi, 101), 2);
  EXPECT_TRUE(zero.exact);
  for (double r : zero.residual_norms) EXPECT_EQ(r, 0.0);
  EXPECT_THROW(annihilation_residual(kFamilyA, Grid(0, pi, 101), 2, 2), InvalidInput);
}

TEST(Spectral, IntertwiningConvergesForMatchedPartners) {
  const ConvergenceReport a = intertwining_convergence(kFamilyA, kFamilyA, 0.0, [](double z) { return std::sin(z); },
                                                       Grid(0, pi, 101), 2, 4);
  EXPECT_TRUE(a.order_within(2.0)) << a.estimated_order;
  const ConvergenceReport b = intertwining_convergence(
      kFamilyB, kFamilyB, 0.5, [](double z) { return std::exp(complex(0, z)); }, Grid(0, pi, 101), 2, 4);
  EXPECT_TRUE(b.order_within(2.0)) << b.estimated_order;
  const ConvergenceReport b4 = intertwining_convergence(
      kFamilyB, kFamilyB, 0.0, [](double z) { return std::exp(complex(0, z)); }, Grid(0, pi, 101), 4, 4);
  EXPECT_TRUE(b4.order_within(4.0)) << b4.estimated_order;
}

TEST(Spectral, IntertwiningPlateausForMismatchedSuperpotential) {
  const Superpotential perturbed = Superpotential::plane_wave(1.1, 2);
  const ConvergenceReport r = intertwining_convergence(kFamilyA, perturbed, 0.0, [](double z) { return std::sin(z); },
                                                       Grid(0, pi, 101), 2, 4);
  EXPECT_TRUE(r.plateaus_above(1e-3)) << r.residual_norms.back() << " order " << r.estimated_order;
}

TEST(Spectral, RandomTestFunctionIntertwines) {
  oracle::ParameterDraw draw(17);
  for (int trial = 0; trial < 3; ++trial) {
    const double a1 = draw.uniform(-1, 1), a2 = draw.uniform(-1, 1), b1 = draw.uniform(-1, 1);
    const auto psi = [=](double z) { return complex(a1 * std::sin(z) + a2 * std::cos(2 * z), b1 * std::sin(3 * z)); };
    const ConvergenceReport r = intertwining_convergence(kFamilyB, kFamilyB, 0.0, psi, Grid(0, pi, 101), 2, 4);
    EXPECT_TRUE(r.order_within(2.0)) << r.estimated_order;
  }
}

TEST(Spectral, FactorizationMatchesHminus) {
  for (int order : {2, 4}) {
    std::vector<double> h, r;
    for (std::size_t n : {101u, 201u, 401u}) {
      const Grid g(0, pi, n);
      const ComplexField psi = sample_function(g, [](double z) { return complex(std::cos(z), std::sin(2 * z)); });
      const auto v = partner_potentials(kFamilyA, {1, 1, 0}, g);
      const ComplexField direct = apply_hamiltonian({v.v_minus, 0.0, order, Boundary::Dirichlet}, psi);
      const ComplexField factored = apply_creator(kFamilyA, apply_annihilator(kFamilyA, psi, order), order);
      std::vector<complex> diff(g.count());
      for (std::size_t i = 0; i < g.count(); ++i) diff[i] = direct[i] - factored[i];
      r.push_back(interior_max_abs(diff, order));
      h.push_back(g.spacing());
    }
    EXPECT_NEAR(fit_convergence_order(h, r), order, 0.3);
  }
}

TEST(Spectral, SolutionMappingFreeParticle) {
  const double length = 3.0, energy = (pi / length) * (pi / length);
  const Grid g(0, length, 301);
  const ComplexField psi = sample_function(g, [&](double z) { return std::sin(pi * z / length); });
  const Superpotential none = Superpotential::plane_wave(0, 1);
  const ComplexField mapped = susy_map_solution(none, psi, 2);
  for (std::size_t i = 1; i + 1 < g.count(); ++i)
    EXPECT_NEAR(std::abs(mapped[i] - (pi / length) * std::cos(pi * g.node(i) / length)), 0, 2e-4);
  const DiscreteOperatorSpec free{zeros(g), 0.0, 2, Boundary::Dirichlet};
  EXPECT_LE(eigen_residual(free, mapped, energy, 1), 1e-4);
}

TEST(Spectral, SolutionMappingPreservesResidualScale) {
  const double energy = 4.0;
  const Grid g(0, pi, 401);
  const Integrated s = integrate_minus(kFamilyA, g, energy);
  const auto v = partner_potentials(kFamilyA, {1, 1, 0}, g);
  const DiscreteOperatorSpec minus{v.v_minus, 0.0, 2, Boundary::Dirichlet};
  const DiscreteOperatorSpec plus{v.v_plus, 0.0, 2, Boundary::Dirichlet};
  const double input = eigen_residual(minus, s.psi, energy);
  const double mapped = eigen_residual(plus, susy_map_solution(kFamilyA, s.psi, 2), energy, 1);
  EXPECT_LE(mapped, 10.0 * input);

  const DiscreteOperatorSpec minus4{v.v_minus, 0.0, 4, Boundary::Dirichlet};
  const DiscreteOperatorSpec plus4{v.v_plus, 0.0, 4, Boundary::Dirichlet};
  const double input4 = eigen_residual(minus4, s.psi, energy);
  const double exact_route = eigen_residual(plus4, susy_map_solution(kFamilyA, s.psi, s.dpsi), energy);
  EXPECT_LE(exact_route, 10.0 * input4);
}

TEST(Spectral, GroundStateMapsToZero) {
  const Grid g(0, pi, 401);
  const ComplexField mapped = susy_map_solution(kFamilyB, ground_state(kFamilyB, g), 4);
  EXPECT_LE(interior_max_abs(mapped.values(), 2), 1e-4);
}

TEST(Spectral, OrderFitRecoversPowerLaw) {
  const std::vector<double> h{0.1, 0.05, 0.025};
  const std::vector<double> r{3 * std::pow(0.1, 2.5), 3 * std::pow(0.05, 2.5), 3 * std::pow(0.025, 2.5)};
  EXPECT_NEAR(fit_convergence_order(h, r), 2.5, 1e-12);
}
