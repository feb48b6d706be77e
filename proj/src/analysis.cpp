#include "spdc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spdc {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

double fold_orientation(double deg) {
  while (deg <= -90.0) deg += 180.0;
  while (deg > 90.0) deg -= 180.0;
  return deg;
}

bool overlaps(const Axis& a, const Axis& b) { return a.start <= b.back() && b.start <= a.back(); }

std::vector<double> unit_l2(const AmplitudeGrid& g) {
  std::vector<double> v = normalize_grid(g).values;
  double norm = 0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

} // namespace

EllipseSummary moments(const AmplitudeGrid& g) {
  double m0 = 0, m1 = 0, m2 = 0;
  for (std::size_t a = 0; a < g.axis1.count; ++a) {
    const double r1 = g.axis1[a];
    for (std::size_t b = 0; b < g.axis2.count; ++b) {
      const double w = g.at(a, b);
      m0 += w;
      m1 += w * r1;
      m2 += w * g.axis2[b];
    }
  }
  if (!(m0 > 0) || !std::isfinite(m0)) throw std::domain_error("moments: grid has no positive mass");

  EllipseSummary e;
  e.mean1 = m1 / m0;
  e.mean2 = m2 / m0;
  double c11 = 0, c22 = 0, c12 = 0;
  for (std::size_t a = 0; a < g.axis1.count; ++a) {
    const double d1 = g.axis1[a] - e.mean1;
    for (std::size_t b = 0; b < g.axis2.count; ++b) {
      const double w = g.at(a, b);
      const double d2 = g.axis2[b] - e.mean2;
      c11 += w * d1 * d1;
      c22 += w * d2 * d2;
      c12 += w * d1 * d2;
    }
  }
  e.cov11 = c11 / m0;
  e.cov22 = c22 / m0;
  e.cov12 = c12 / m0;
  e.correlation = e.cov12 / std::sqrt(e.cov11 * e.cov22);

  const double mid = 0.5 * (e.cov11 + e.cov22);
  const double rad = std::hypot(0.5 * (e.cov11 - e.cov22), e.cov12);
  const double l_max = mid + rad;
  const double l_min = std::max(mid - rad, 0.0);
  if (rad <= 1e-12 * std::abs(mid)) {
    e.orientation = 0.0;
    e.aspect_ratio = 1.0;
    return e;
  }
  // Leading eigenvector angle of [[c11, c12], [c12, c22]].
  e.orientation = fold_orientation(0.5 * std::atan2(2.0 * e.cov12, e.cov11 - e.cov22) * kDeg);
  e.aspect_ratio = l_min > 0 ? std::sqrt(l_max / l_min) : std::numeric_limits<double>::infinity();
  return e;
}

AmplitudeGrid resample(const AmplitudeGrid& g, const Axis& axis1, const Axis& axis2) {
  AmplitudeGrid out(axis1, axis2, g.provenance);
  out.metadata = g.metadata;
  auto locate = [](const Axis& ax, double x, std::size_t& k, double& t) {
    if (ax.count < 2) {
      k = 0;
      t = 0;
      return x == ax.start;
    }
    const double u = (x - ax.start) / ax.step;
    if (u < 0 || u > static_cast<double>(ax.count - 1)) return false;
    k = std::min(static_cast<std::size_t>(u), ax.count - 2);
    t = u - static_cast<double>(k);
    return true;
  };
  for (std::size_t a = 0; a < axis1.count; ++a) {
    std::size_t i;
    double s;
    if (!locate(g.axis1, axis1[a], i, s)) continue;
    for (std::size_t b = 0; b < axis2.count; ++b) {
      std::size_t j;
      double t;
      if (!locate(g.axis2, axis2[b], j, t)) continue;
      const std::size_t i1 = g.axis1.count > 1 ? i + 1 : i;
      const std::size_t j1 = g.axis2.count > 1 ? j + 1 : j;
      out.at(a, b) = (1 - s) * (1 - t) * g.at(i, j) + s * (1 - t) * g.at(i1, j) +
                     (1 - s) * t * g.at(i, j1) + s * t * g.at(i1, j1);
    }
  }
  return out;
}

MapComparison compare_maps(const AmplitudeGrid& g1, const AmplitudeGrid& g2) {
  if (!overlaps(g1.axis1, g2.axis1) || !overlaps(g1.axis2, g2.axis2))
    throw std::invalid_argument("compare_maps: axis ranges do not overlap");
  const bool same = g1.axis1.same_as(g2.axis1) && g1.axis2.same_as(g2.axis2);
  const AmplitudeGrid second = same ? g2 : resample(g2, g1.axis1, g1.axis2);

  MapComparison c;
  c.first = moments(g1);
  c.second = moments(second);
  c.d_orientation = std::abs(fold_orientation(c.first.orientation - c.second.orientation));
  c.d_aspect = std::abs(c.first.aspect_ratio - c.second.aspect_ratio);
  const auto p = unit_l2(g1);
  const auto q = unit_l2(second);
  double d2 = 0;
  for (std::size_t k = 0; k < p.size(); ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
  c.l2 = std::sqrt(d2);
  return c;
}

double max_relative_deviation(const AmplitudeGrid& a, const AmplitudeGrid& b, double floor) {
  if (!a.axis1.same_as(b.axis1) || !a.axis2.same_as(b.axis2))
    throw std::invalid_argument("max_relative_deviation: grids must share axes");
  const double peak = *std::max_element(b.values.begin(), b.values.end());
  double worst = 0;
  for (std::size_t k = 0; k < b.values.size(); ++k) {
    if (!(b.values[k] > floor * peak)) continue;
    worst = std::max(worst, std::abs(a.values[k] - b.values[k]) / b.values[k]);
  }
  return worst;
}

AmplitudeGrid standardize(const AmplitudeGrid& g) {
  const EllipseSummary e = moments(g);
  const double scale = std::sqrt(0.5 * (e.cov11 + e.cov22));
  if (!(scale > 0)) throw std::domain_error("standardize: degenerate grid");
  AmplitudeGrid out = g;
  out.axis1.start = (g.axis1.start - e.mean1) / scale;
  out.axis1.step = g.axis1.step / scale;
  out.axis2.start = (g.axis2.start - e.mean2) / scale;
  out.axis2.step = g.axis2.step / scale;
  return normalize_grid(std::move(out));
}

nlohmann::json to_json(const EllipseSummary& e) {
  return {{"mean1", e.mean1},       {"mean2", e.mean2},
          {"cov11", e.cov11},       {"cov22", e.cov22},
          {"cov12", e.cov12},       {"orientation_deg", e.orientation},
          {"aspect_ratio", e.aspect_ratio}, {"correlation", e.correlation}};
}

nlohmann::json to_json(const MapComparison& c) {
  return {{"d_orientation_deg", c.d_orientation},
          {"d_aspect_ratio", c.d_aspect},
          {"l2", c.l2},
          {"first", to_json(c.first)},
          {"second", to_json(c.second)}};
}

} // namespace spdc
