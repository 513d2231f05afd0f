#include "ptsusy/grid.hpp"

#include <cmath>
#include <string>

#include "ptsusy/errors.hpp"

namespace ptsusy {

Grid::Grid(double z_start, double z_end, std::size_t count)
    : z_start_(z_start), z_end_(z_end), count_(count) {
  if (!std::isfinite(z_start) || !std::isfinite(z_end))
    throw InvalidInput("grid bounds must be finite");
  if (!(z_end > z_start))
    throw InvalidInput("grid requires z_end > z_start");
  if (count < 2)
    throw InvalidInput("grid requires at least 2 points, got " + std::to_string(count));
  spacing_ = (z_end - z_start) / static_cast<double>(count - 1);
}

double Grid::node(std::size_t i) const {
  if (i + 1 == count_) return z_end_;
  return z_start_ + static_cast<double>(i) * spacing_;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = node(i);
  return out;
}

Grid Grid::refined() const { return Grid(z_start_, z_end_, 2 * (count_ - 1) + 1); }

ComplexField::ComplexField(Grid grid, std::vector<complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.count())
    throw GridMismatch("field has " + std::to_string(values_.size()) + " values for a grid of " +
                       std::to_string(grid_.count()) + " nodes");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ComputationError("field contains a non-finite sample");
  }
}

void require_same_grid(const ComplexField& a, const ComplexField& b) {
  if (!(a.grid() == b.grid())) throw GridMismatch("fields are sampled on different grids");
}

}  // namespace ptsusy
