#include "ptsusy/ode.hpp"

#include "ptsusy/errors.hpp"

namespace ptsusy {

OdeState rk4_step(const Coefficient& c, double z, double h, const OdeState& s) {
  const complex c0 = c(z);
  const complex c_mid = c(z + 0.5 * h);
  const complex c1 = c(z + h);

  const complex k1y = s.dy;
  const complex k1d = c0 * s.y;
  const complex k2y = s.dy + 0.5 * h * k1d;
  const complex k2d = c_mid * (s.y + 0.5 * h * k1y);
  const complex k3y = s.dy + 0.5 * h * k2d;
  const complex k3d = c_mid * (s.y + 0.5 * h * k2y);
  const complex k4y = s.dy + h * k3d;
  const complex k4d = c1 * (s.y + h * k3y);

  return {s.y + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
          s.dy + h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d)};
}

OdeState integrate_linear(const Coefficient& c, double z0, double z1, std::size_t steps, const OdeState& initial) {
  if (steps == 0) throw InvalidInput("integration needs at least one step");
  const double h = (z1 - z0) / static_cast<double>(steps);
  OdeState state = initial;
  for (std::size_t i = 0; i < steps; ++i) state = rk4_step(c, z0 + static_cast<double>(i) * h, h, state);
  return state;
}

std::vector<OdeState> integrate_on_grid(const Coefficient& c, const Grid& grid, std::size_t substeps,
                                        const OdeState& initial) {
  if (substeps == 0) throw InvalidInput("integration needs at least one substep per interval");
  std::vector<OdeState> out;
  out.reserve(grid.count());
  out.push_back(initial);
  OdeState state = initial;
  for (std::size_t i = 0; i + 1 < grid.count(); ++i) {
    state = integrate_linear(c, grid.node(i), grid.node(i + 1), substeps, state);
    out.push_back(state);
  }
  return out;
}

}  // namespace ptsusy
