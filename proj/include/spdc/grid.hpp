#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace spdc {

/// Detection-plane slice: which detector coordinates vary. The first
/// coordinate always belongs to the signal detector, the second to the idler;
/// the remaining two coordinates are held at zero.
enum class Plane { xx, yy, xy, yx };

inline constexpr Plane kAllPlanes[] = {Plane::xx, Plane::yy, Plane::xy, Plane::yx};

std::string_view to_string(Plane plane);
/// Throws std::invalid_argument for unknown names.
Plane parse_plane(std::string_view name);
/// Coordinate labels of the plane, e.g. {"x_s", "x_i"}.
std::pair<std::string, std::string> plane_axis_names(Plane plane);

enum class Provenance { quantum_analytic, quantum_numeric, geometric_mc };

std::string_view to_string(Provenance p);

/// Uniform, strictly increasing coordinate axis.
struct Axis {
  std::string name;
  double start{};
  double step{1.0};
  std::size_t count{};

  double operator[](std::size_t k) const { return start + step * static_cast<double>(k); }
  double back() const { return (*this)[count - 1]; }
  std::vector<double> values() const;

  /// Symmetric axis of `count` points spanning [-half_extent, half_extent].
  static Axis symmetric(std::string name, double half_extent, std::size_t count);
  /// Throws std::invalid_argument unless `values` is uniform and increasing.
  static Axis from_values(std::string name, std::span<const double> values);

  bool same_as(const Axis& other) const;
};

/// Real 2D array over (axis1, axis2), row-major with axis1 as the row index.
struct AmplitudeGrid {
  Axis axis1;
  Axis axis2;
  std::vector<double> values;
  Provenance provenance{Provenance::quantum_analytic};
  nlohmann::json metadata = nlohmann::json::object();

  AmplitudeGrid() = default;
  AmplitudeGrid(Axis a1, Axis a2, Provenance prov);

  double& at(std::size_t i1, std::size_t i2) { return values[i1 * axis2.count + i2]; }
  double at(std::size_t i1, std::size_t i2) const { return values[i1 * axis2.count + i2]; }
  double cell_area() const { return axis1.step * axis2.step; }
  /// Sum in fixed row order, times cell area.
  double mass() const;

  /// Throws std::invalid_argument if dimensions or values are inconsistent.
  void validate() const;
};

/// Rescales so that sum * cell area == 1. Throws std::domain_error when the
/// grid carries no positive mass.
AmplitudeGrid normalize_grid(AmplitudeGrid g);

} // namespace spdc
