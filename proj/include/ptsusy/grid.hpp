#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ptsusy {

using complex = std::complex<double>;

/// Closed uniform grid on [z_start, z_end]; both endpoints are nodes.
class Grid {
 public:
  Grid(double z_start, double z_end, std::size_t count);

  double z_start() const { return z_start_; }
  double z_end() const { return z_end_; }
  std::size_t count() const { return count_; }
  double spacing() const { return spacing_; }
  double length() const { return z_end_ - z_start_; }

  /// Node i. The last node is exactly z_end.
  double node(std::size_t i) const;
  std::vector<double> nodes() const;

  /// Half the spacing over the same interval: 2(count-1)+1 nodes.
  Grid refined() const;

  bool operator==(const Grid&) const = default;

 private:
  double z_start_;
  double z_end_;
  std::size_t count_;
  double spacing_;
};

/// Complex samples on a grid. All values must be finite.
class ComplexField {
 public:
  ComplexField(Grid grid, std::vector<complex> values);

  const Grid& grid() const { return grid_; }
  std::span<const complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const complex& operator[](std::size_t i) const { return values_[i]; }

 private:
  Grid grid_;
  std::vector<complex> values_;
};

/// Throws GridMismatch unless both fields live on the same grid.
void require_same_grid(const ComplexField& a, const ComplexField& b);

template <typename Fn>
ComplexField sample_function(const Grid& grid, Fn&& fn) {
  std::vector<complex> values(grid.count());
  for (std::size_t i = 0; i < grid.count(); ++i) values[i] = fn(grid.node(i));
  return ComplexField(grid, std::move(values));
}

}  // namespace ptsusy
