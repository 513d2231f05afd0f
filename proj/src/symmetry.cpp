#include "ptsusy/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ptsusy/errors.hpp"

namespace ptsusy {

namespace {

constexpr double kSymmetricGridTol = 1e-12;

SymmetryReport make_report(double violation, std::size_t points, double tolerance) {
  return {violation, violation <= tolerance, points};
}

}  // namespace

SymmetryReport pt_check_analytic(const std::function<complex(double)>& index, double half_width,
                                 std::size_t count, double tolerance) {
  if (!(half_width > 0.0)) throw NonPositiveInput("PT check half width must be positive");
  const Grid grid(-half_width, half_width, count);
  double violation = 0.0;
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double z = grid.node(i);
    violation = std::max(violation, std::abs(index(z) - std::conj(index(-z))));
  }
  return make_report(violation, grid.count(), tolerance);
}

SymmetryReport pt_check_analytic(const Profile& p, double half_width, std::size_t count, double tolerance) {
  return pt_check_analytic([&p](double z) { return evaluate(p, z); }, half_width, count, tolerance);
}

ComplexField parity_reflect(const ComplexField& field) {
  const Grid& grid = field.grid();
  const double scale = std::max({std::abs(grid.z_start()), std::abs(grid.z_end()), 1.0});
  if (std::abs(grid.z_start() + grid.z_end()) > kSymmetricGridTol * scale)
    throw AsymmetricGrid("parity reflection needs a grid symmetric about z = 0");
  std::vector<complex> values(field.values().rbegin(), field.values().rend());
  return ComplexField(grid, std::move(values));
}

ComplexField time_reverse(const ComplexField& field) {
  std::vector<complex> values(field.size());
  std::transform(field.values().begin(), field.values().end(), values.begin(),
                 [](const complex& v) { return std::conj(v); });
  return ComplexField(field.grid(), std::move(values));
}

SymmetryReport pt_check_field(const ComplexField& field, double tolerance) {
  const ComplexField image = time_reverse(parity_reflect(field));
  double violation = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i)
    violation = std::max(violation, std::abs(field[i] - image[i]));
  return make_report(violation, field.size(), tolerance);
}

}  // namespace ptsusy
