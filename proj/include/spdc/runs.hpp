#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "spdc/analysis.hpp"
#include "spdc/config.hpp"
#include "spdc/geometric_model.hpp"
#include "spdc/grid.hpp"

namespace spdc {

/// Aspect ratio below which a map counts as circular and its orientation is
/// reported as undefined.
inline constexpr double kIsotropicAspect = 1.01;
/// Cross-model agreement: orientations within 2 degrees, or, where the
/// quantum map is circular, an MC correlation below 0.05 in magnitude.
inline constexpr double kOrientationTolDeg = 2.0;
inline constexpr double kCircularCorrelationTol = 0.05;

struct QuantumPlaneResult {
  Plane plane{};
  AmplitudeGrid analytic;
  AmplitudeGrid numeric;
  EllipseSummary analytic_summary;
  EllipseSummary numeric_summary;
  double max_rel_deviation{};
  double l2{};
};

struct QuantumRun {
  std::vector<QuantumPlaneResult> planes;
  nlohmann::json summary;
  std::vector<std::filesystem::path> files;
};

/// Analytic and numeric coincidence densities per plane. With `write`, each
/// grid goes to `<out>/q_<plane>_{analytic,numeric}.csv` plus a `.json`
/// sidecar, and the summary to `<out>/qmap_summary.json`.
QuantumRun run_quantum_maps(const RunConfig& cfg, std::span<const Plane> planes, bool write = true);

struct GeometricPlaneResult {
  Plane plane{};
  CoincidenceMap map;
  std::optional<EllipseSummary> summary; ///< empty when nothing was detected
};

struct GeometricRun {
  std::vector<GeometricPlaneResult> planes;
  nlohmann::json summary;
  std::vector<std::filesystem::path> files;
};

/// Monte Carlo ring-model maps. Files: `g_<plane>.csv` (unit-mass density),
/// `g_<plane>_counts.csv`, `g_<plane>.json` and `gmap_summary.json`.
GeometricRun run_geometric_maps(const RunConfig& cfg, std::span<const Plane> planes,
                                bool write = true);

struct CompareRow {
  Plane plane{};
  MapComparison analytic_vs_numeric;
  double max_rel_deviation{};
  std::optional<MapComparison> quantum_vs_mc; ///< empty when the MC map is empty
  bool circular{false}; ///< quantum map circular: orientation undefined
  bool agrees{false};
};

struct CompareReport {
  std::vector<CompareRow> rows;
  nlohmann::json report;
  std::vector<std::filesystem::path> files;
};

/// Runs both models and compares them per plane; writes
/// `<out>/compare_report.json` when `write` is set.
CompareReport run_compare(const RunConfig& cfg, std::span<const Plane> planes, bool write = true);

std::string format_quantum_table(const QuantumRun& run);
std::string format_geometric_table(const GeometricRun& run);
std::string format_compare_table(const CompareReport& report);
std::string format_geometry_table(const RunConfig& cfg);

} // namespace spdc
