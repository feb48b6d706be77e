#pragma once

#include "json.hpp"

#include "spdc/grid.hpp"

namespace spdc {

/// Second-moment ellipse of a 2D density.
struct EllipseSummary {
  double mean1{};
  double mean2{};
  double cov11{};
  double cov22{};
  double cov12{};
  double orientation{};  ///< degrees, leading principal axis, in (-90, 90]
  double aspect_ratio{}; ///< sqrt(lambda_max / lambda_min) >= 1
  double correlation{};  ///< Pearson coefficient cov12 / sqrt(cov11 cov22)
};

/// Mass-weighted moments of the grid. Equal eigenvalues (within 1e-12
/// relative) report orientation 0 and aspect ratio 1. Throws
/// std::domain_error for a grid without positive mass.
EllipseSummary moments(const AmplitudeGrid& g);

/// Bilinear resample of `g` onto the axes of `target`; zero outside g.
AmplitudeGrid resample(const AmplitudeGrid& g, const Axis& axis1, const Axis& axis2);

struct MapComparison {
  double d_orientation{}; ///< |orientation difference| in degrees, folded mod 180
  double d_aspect{};
  double l2{}; ///< distance of the L2-normalized unit-mass grids, in [0, sqrt 2]
  EllipseSummary first;
  EllipseSummary second;
};

/// Compares two maps; g2 is resampled onto g1's axes when they differ.
/// Throws std::invalid_argument when the axis ranges do not overlap.
MapComparison compare_maps(const AmplitudeGrid& g1, const AmplitudeGrid& g2);

/// Largest |a - b| / b over cells of identical grids where b exceeds
/// `floor` times b's peak. Throws std::invalid_argument on mismatched axes.
double max_relative_deviation(const AmplitudeGrid& a, const AmplitudeGrid& b, double floor = 1e-9);

/// Rescales both axes by one common factor, the RMS radius of the density
/// about its mean, and re-centres them; orientation is preserved. Used to put
/// maps in different units on a common footing.
AmplitudeGrid standardize(const AmplitudeGrid& g);

nlohmann::json to_json(const EllipseSummary& e);
nlohmann::json to_json(const MapComparison& c);

} // namespace spdc
