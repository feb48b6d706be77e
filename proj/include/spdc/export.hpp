#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "spdc/config.hpp"
#include "spdc/geometric_model.hpp"
#include "spdc/grid.hpp"

namespace spdc {

inline constexpr int kGridFormatVersion = 1;

/// Shortest text that reads back to the same double ("%.17g").
std::string format_double(double v);

/// Grid CSV, RFC 4180 compatible with CRLF line ends. The first row holds a
/// corner cell `spdc-grid/1 cfg=<hash> <axis1>\<axis2>` followed by the axis2
/// coordinates; every further row is an axis1 coordinate and its values.
std::string grid_csv(const AmplitudeGrid& g, const std::string& config_hash);
/// Same layout with integer coincidence counts.
std::string counts_csv(const CoincidenceMap& m, const std::string& config_hash);

/// JSON sidecar: format tag and version, axes, provenance, grid metadata,
/// config hash and the resolved configuration snapshot.
nlohmann::json grid_sidecar(const AmplitudeGrid& g, const RunConfig& cfg);

/// Throws IoError on failure. Parent directories are created.
void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

struct CsvGrid {
  std::string corner;
  std::vector<double> axis1;
  std::vector<double> axis2;
  std::vector<double> values; ///< row-major, axis1 index first
};

/// Reads a grid CSV written by grid_csv or counts_csv.
CsvGrid read_grid_csv(const std::filesystem::path& path);

} // namespace spdc
