#pragma once

#include <cstdint>
#include <vector>

#include "spdc/grid.hpp"
#include "spdc/params.hpp"
#include "spdc/random.hpp"

namespace spdc {

struct Point2 {
  double x{};
  double y{};
};

/// One down-converted pair in the lab frame of the detection plane, origin on
/// the pump axis.
struct PairEvent {
  double diameter{};
  double azimuth{};
  Point2 signal_point;
  Point2 idler_point;
};

/// How a detector's local displacement axes map into the lab frame.
/// `antipodal` is a point reflection: local x -> -x and local y -> -y, which
/// is the idler detector facing the signal detector across the ring.
enum class Mounting { direct, antipodal };

/// Truncation of the ring-diameter Gaussian, in standard deviations.
inline constexpr double kDiameterTruncation = 5.0;

/// Samples a pair on the ring: diameter ~ N(ring_diameter, ring_half_width/2)
/// truncated at 5 standard deviations, azimuth uniform, photons antipodal.
PairEvent sample_pair(const ExperimentGeometry& geom, CounterRng& rng);

/// Closed-disk pinhole test of `point` against a detector displaced by
/// `displacement` (detector-local frame) from `detector_center` (lab frame).
bool detector_accept(Point2 point, Point2 detector_center, Point2 displacement,
                     double pinhole_radius, Mounting mounting = Mounting::direct);

/// Phase-matched detector centers used by the ring model: the signal detector
/// on +x, the idler on -x, both at ring_diameter / 2.
Point2 signal_detector_center(const ExperimentGeometry& geom);
Point2 idler_detector_center(const ExperimentGeometry& geom);

struct SweepSpec {
  Plane plane{Plane::xx};
  Axis offsets1; ///< signal-detector displacements (m)
  Axis offsets2; ///< idler-detector displacements (m)
  std::uint64_t n_samples{};
  std::uint64_t seed{};

  void validate() const;
};

/// Coincidence counts over a displacement sweep. `grid` holds the unit-mass
/// density of the counts (all zero when nothing was detected).
struct CoincidenceMap {
  AmplitudeGrid grid;
  std::vector<std::uint64_t> counts;
  std::uint64_t n_samples{};
  std::uint64_t seed{};
  bool no_coincidences{false};

  std::uint64_t count(std::size_t i1, std::size_t i2) const {
    return counts[i1 * grid.axis2.count + i2];
  }
  double rate(std::size_t i1, std::size_t i2) const {
    return static_cast<double>(count(i1, i2)) / static_cast<double>(n_samples);
  }
};

/// Counts, for every offset pair, the events whose two photons pass both
/// pinholes. All offsets share one event stream; event k draws from
/// CounterRng(seed, k), so the map is identical for any `threads` value
/// (0 = hardware concurrency).
CoincidenceMap run_sweep(const SweepSpec& spec, const ExperimentGeometry& geom,
                         unsigned threads = 0);

} // namespace spdc
