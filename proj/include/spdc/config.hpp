#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spdc/geometric_model.hpp"
#include "spdc/momentum_amplitude.hpp"
#include "spdc/params.hpp"

namespace spdc {

struct GridSettings {
  std::size_t size{256};
  double extent_sigmas{5.0};
  std::size_t dft_size{1024};
};

struct McSettings {
  std::uint64_t samples{1'000'000};
  std::uint64_t seed{1};
  std::size_t size{41};
  double extent{0}; ///< half extent of the displacement sweep (m); 0 = automatic
};

/// Fully resolved run configuration.
///
/// File syntax is one `key = value [unit]` per line, `#` starts a comment.
/// Keys: preset, pump.{lambda_p, bandwidth | delta_omega, sigma},
/// filter_s.{sigma_x, sigma_y, alpha}, filter_i.{...},
/// geometry.{L_D, phi_i, phi_s, d_i, d_s, ring_diameter, ring_half_width,
/// pinhole_radius, crystal_length}, grid.{size, extent_sigmas, dft_size},
/// mc.{samples, seed, size, extent}, output.dir.
/// Values are SI; lengths accept m|cm|mm|um|nm, angles rad|mrad, times
/// s|ns|ps|fs and angular frequencies rad/s.
struct RunConfig {
  std::string preset;
  PumpBeam pump;
  double pump_bandwidth{0}; ///< wavelength bandwidth (m) if given, else 0
  DetectionFilter filter_s;
  DetectionFilter filter_i;
  ExperimentGeometry geometry;
  double crystal_length{0}; ///< metadata only
  GridSettings grid;
  McSettings mc;
  std::string output_dir{"out"};
  /// Keys holding synthetic model-unit defaults rather than measured values.
  std::vector<std::string> synthetic_keys;

  QuantumParams quantum() const { return {pump, filter_s, filter_i}; }

  /// Throws ConfigError naming the offending key(s).
  void validate() const;

  /// Canonical resolved snapshot (sorted keys), embedded in every output.
  nlohmann::json to_json() const;
  /// 16 hex digits of FNV-1a over the canonical snapshot.
  std::string hash() const;

  /// Signal/idler sweep offsets for Monte Carlo maps (m).
  Axis mc_offsets(std::string name) const;
};

/// Named presets: "bbo2009" (symmetric filters) and "bbo2009-asym"
/// (sigma_y = 2 sigma_x on both filters). Throws ConfigError when unknown.
RunConfig preset_config(std::string_view name);
std::vector<std::string> preset_names();

/// Parses configuration text; `source` labels error messages.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>");

/// Reads and parses a configuration file. Throws IoError if unreadable.
RunConfig load_config_file(const std::filesystem::path& path);

/// A preset name if one matches, otherwise a file path.
RunConfig load_config(std::string_view path_or_preset);

/// Key value assignment as it would appear in a file, e.g. ("mc.seed", "7").
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

} // namespace spdc
