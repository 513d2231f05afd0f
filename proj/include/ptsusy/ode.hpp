#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ptsusy/grid.hpp"

namespace ptsusy {

/// (y, y') for the linear equation y'' = c(z) y.
struct OdeState {
  complex y;
  complex dy;
};

using Coefficient = std::function<complex(double)>;

/// One classical Runge-Kutta step of y'' = c(z) y.
OdeState rk4_step(const Coefficient& c, double z, double h, const OdeState& state);

/// Fixed-step RK4 from z0 to z1.
OdeState integrate_linear(const Coefficient& c, double z0, double z1, std::size_t steps, const OdeState& initial);

/// Fixed-step RK4 across the grid, substeps per grid interval. Returns the state at
/// every node; the first entry is `initial` at grid.z_start().
std::vector<OdeState> integrate_on_grid(const Coefficient& c, const Grid& grid, std::size_t substeps,
                                        const OdeState& initial);

}  // namespace ptsusy
