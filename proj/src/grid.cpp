#include "spdc/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace spdc {

std::string_view to_string(Plane plane) {
  switch (plane) {
  case Plane::xx: return "xx";
  case Plane::yy: return "yy";
  case Plane::xy: return "xy";
  case Plane::yx: return "yx";
  }
  return "?";
}

Plane parse_plane(std::string_view name) {
  for (Plane p : kAllPlanes)
    if (to_string(p) == name) return p;
  throw std::invalid_argument("unknown plane '" + std::string(name) + "' (expected xx|yy|xy|yx)");
}

std::pair<std::string, std::string> plane_axis_names(Plane plane) {
  switch (plane) {
  case Plane::xx: return {"x_s", "x_i"};
  case Plane::yy: return {"y_s", "y_i"};
  case Plane::xy: return {"x_s", "y_i"};
  case Plane::yx: return {"y_s", "x_i"};
  }
  return {};
}

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::quantum_analytic: return "quantum-analytic";
  case Provenance::quantum_numeric: return "quantum-numeric";
  case Provenance::geometric_mc: return "geometric-MC";
  }
  return "?";
}

std::vector<double> Axis::values() const {
  std::vector<double> v(count);
  for (std::size_t k = 0; k < count; ++k) v[k] = (*this)[k];
  return v;
}

Axis Axis::symmetric(std::string name, double half_extent, std::size_t count) {
  if (count < 2 || !(half_extent > 0))
    throw std::invalid_argument("Axis::symmetric: need count >= 2 and half_extent > 0");
  return Axis{std::move(name), -half_extent, 2.0 * half_extent / static_cast<double>(count - 1),
              count};
}

Axis Axis::from_values(std::string name, std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("axis '" + name + "' needs >= 2 points");
  const double step = (values.back() - values.front()) / static_cast<double>(values.size() - 1);
  if (!(step > 0)) throw std::invalid_argument("axis '" + name + "' must be strictly increasing");
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double expect = values.front() + step * static_cast<double>(k);
    if (!std::isfinite(values[k]) || std::abs(values[k] - expect) > 1e-9 * step)
      throw std::invalid_argument("axis '" + name + "' must be uniformly spaced");
  }
  return Axis{std::move(name), values.front(), step, values.size()};
}

bool Axis::same_as(const Axis& other) const {
  return count == other.count && start == other.start && step == other.step;
}

AmplitudeGrid::AmplitudeGrid(Axis a1, Axis a2, Provenance prov)
    : axis1(std::move(a1)), axis2(std::move(a2)), values(axis1.count * axis2.count, 0.0),
      provenance(prov) {}

double AmplitudeGrid::mass() const {
  double total = 0;
  for (std::size_t i = 0; i < axis1.count; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < axis2.count; ++j) row += at(i, j);
    total += row;
  }
  return total * cell_area();
}

void AmplitudeGrid::validate() const {
  if (axis1.count < 1 || axis2.count < 1 || !(axis1.step > 0) || !(axis2.step > 0))
    throw std::invalid_argument("grid axes must be non-empty and increasing");
  if (values.size() != axis1.count * axis2.count)
    throw std::invalid_argument("grid values do not match axis dimensions");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("grid values must be finite");
}

AmplitudeGrid normalize_grid(AmplitudeGrid g) {
  const double m = g.mass();
  if (!(m > 0) || !std::isfinite(m))
    throw std::domain_error("normalize_grid: grid has no positive mass");
  const double scale = 1.0 / m;
  for (double& v : g.values) v *= scale;
  // One correction pass brings the rounded mass to within a few ulps of 1.
  const double residual = g.mass();
  for (double& v : g.values) v /= residual;
  return g;
}

} // namespace spdc
