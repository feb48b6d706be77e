#include "spdc/geometric_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace spdc {

namespace {

Point2 to_lab(Point2 local, Mounting m) {
  return m == Mounting::direct ? local : Point2{-local.x, -local.y};
}

bool signal_moves_x(Plane p) { return p == Plane::xx || p == Plane::xy; }
bool idler_moves_x(Plane p) { return p == Plane::xx || p == Plane::yx; }

/// One scanning detector: where it sits, how it is mounted, which local axis
/// it scans along and the offsets it visits.
struct Scanner {
  Point2 center;
  Mounting mounting;
  bool along_x;
  const Axis* offsets;
  double radius;

  Point2 displacement(std::size_t k) const {
    const double o = (*offsets)[k];
    return along_x ? Point2{o, 0.0} : Point2{0.0, o};
  }

  /// Appends the indices of every offset whose pinhole contains `p`.
  void accepted(Point2 p, std::vector<std::size_t>& out) const {
    out.clear();
    // Local-frame position relative to the undisplaced detector.
    const Point2 rel{p.x - center.x, p.y - center.y};
    const Point2 local = mounting == Mounting::direct ? rel : Point2{-rel.x, -rel.y};
    const double along = along_x ? local.x : local.y;
    const double across = along_x ? local.y : local.x;
    if (std::abs(across) > radius) return;
    const double half = std::isinf(radius) ? radius : std::sqrt(radius * radius - across * across);
    const auto n = static_cast<std::ptrdiff_t>(offsets->count);
    std::ptrdiff_t lo = 0;
    std::ptrdiff_t hi = n - 1;
    if (std::isfinite(half)) {
      const double a = std::floor((along - half - offsets->start) / offsets->step) - 1;
      const double b = std::ceil((along + half - offsets->start) / offsets->step) + 1;
      if (b < 0 || a > static_cast<double>(n - 1)) return;
      lo = std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(a));
      hi = std::min<std::ptrdiff_t>(n - 1, static_cast<std::ptrdiff_t>(b));
    }
    for (std::ptrdiff_t k = lo; k <= hi; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      if (detector_accept(p, center, displacement(idx), radius, mounting)) out.push_back(idx);
    }
  }
};

} // namespace

PairEvent sample_pair(const ExperimentGeometry& geom, CounterRng& rng) {
  const double std_d = geom.ring_half_width / 2.0;
  double z = rng.normal();
  while (std::abs(z) > kDiameterTruncation) z = rng.normal();
  PairEvent ev;
  ev.diameter = geom.ring_diameter + std_d * z;
  ev.azimuth = 2.0 * std::numbers::pi * rng.uniform();
  const double r = ev.diameter / 2.0;
  ev.signal_point = {r * std::cos(ev.azimuth), r * std::sin(ev.azimuth)};
  ev.idler_point = {-ev.signal_point.x, -ev.signal_point.y};
  return ev;
}

bool detector_accept(Point2 point, Point2 detector_center, Point2 displacement,
                     double pinhole_radius, Mounting mounting) {
  const Point2 d = to_lab(displacement, mounting);
  const double dx = point.x - (detector_center.x + d.x);
  const double dy = point.y - (detector_center.y + d.y);
  return dx * dx + dy * dy <= pinhole_radius * pinhole_radius;
}

Point2 signal_detector_center(const ExperimentGeometry& geom) {
  return {geom.ring_diameter / 2.0, 0.0};
}

Point2 idler_detector_center(const ExperimentGeometry& geom) {
  return {-geom.ring_diameter / 2.0, 0.0};
}

void SweepSpec::validate() const {
  if (n_samples == 0) throw std::invalid_argument("mc.samples must be > 0");
  if (offsets1.count < 1 || !(offsets1.step > 0) || offsets2.count < 1 || !(offsets2.step > 0))
    throw std::invalid_argument("sweep offsets must be non-empty, uniform and increasing");
}

CoincidenceMap run_sweep(const SweepSpec& spec, const ExperimentGeometry& geom, unsigned threads) {
  spec.validate();
  const auto [name1, name2] = plane_axis_names(spec.plane);
  Axis a1 = spec.offsets1;
  Axis a2 = spec.offsets2;
  a1.name = name1;
  a2.name = name2;

  const Scanner signal{signal_detector_center(geom), Mounting::direct,
                       signal_moves_x(spec.plane), &spec.offsets1, geom.pinhole_radius};
  const Scanner idler{idler_detector_center(geom), Mounting::antipodal, idler_moves_x(spec.plane),
                      &spec.offsets2, geom.pinhole_radius};

  const std::size_t n1 = a1.count;
  const std::size_t n2 = a2.count;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, spec.n_samples));

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n1 * n2, 0));
  auto work = [&](unsigned t) {
    std::vector<std::size_t> hits_s;
    std::vector<std::size_t> hits_i;
    auto& counts = partial[t];
    const std::uint64_t begin = spec.n_samples * t / threads;
    const std::uint64_t end = spec.n_samples * (t + 1) / threads;
    for (std::uint64_t k = begin; k < end; ++k) {
      CounterRng rng(spec.seed, k);
      const PairEvent ev = sample_pair(geom, rng);
      signal.accepted(ev.signal_point, hits_s);
      if (hits_s.empty()) continue;
      idler.accepted(ev.idler_point, hits_i);
      for (std::size_t i : hits_s)
        for (std::size_t j : hits_i) ++counts[i * n2 + j];
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }

  CoincidenceMap map;
  map.counts.assign(n1 * n2, 0);
  for (const auto& part : partial)
    for (std::size_t k = 0; k < part.size(); ++k) map.counts[k] += part[k];
  map.n_samples = spec.n_samples;
  map.seed = spec.seed;
  map.grid = AmplitudeGrid(std::move(a1), std::move(a2), Provenance::geometric_mc);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < map.counts.size(); ++k) {
    map.grid.values[k] = static_cast<double>(map.counts[k]);
    total += map.counts[k];
  }
  map.no_coincidences = total == 0;
  if (!map.no_coincidences) map.grid = normalize_grid(std::move(map.grid));

  map.grid.metadata["plane"] = std::string(to_string(spec.plane));
  map.grid.metadata["n_samples"] = spec.n_samples;
  map.grid.metadata["seed"] = spec.seed;
  map.grid.metadata["no_coincidences"] = map.no_coincidences;
  map.grid.metadata["parameters"] = {{"geometry.ring_diameter", geom.ring_diameter},
                                     {"geometry.ring_half_width", geom.ring_half_width},
                                     {"geometry.pinhole_radius", geom.pinhole_radius}};
  return map;
}

} // namespace spdc
