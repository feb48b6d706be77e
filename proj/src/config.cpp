#include "spdc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spdc/errors.hpp"

namespace spdc {

namespace {

enum class Dim { length, angle, time, angular_frequency, number, integer, text };

const char* dim_name(Dim d) {
  switch (d) {
  case Dim::length: return "a length";
  case Dim::angle: return "an angle";
  case Dim::time: return "a time";
  case Dim::angular_frequency: return "an angular frequency";
  case Dim::number: return "a plain number";
  case Dim::integer: return "an integer";
  case Dim::text: return "text";
  }
  return "?";
}

/// Multiplier converting `unit` into SI for dimension `d`, or nullopt.
std::optional<double> unit_factor(Dim d, std::string_view unit) {
  if (unit.empty()) return 1.0;
  static const std::map<std::string_view, double, std::less<>> lengths{
      {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
  static const std::map<std::string_view, double, std::less<>> angles{{"rad", 1.0}, {"mrad", 1e-3}};
  static const std::map<std::string_view, double, std::less<>> times{
      {"s", 1.0}, {"ns", 1e-9}, {"ps", 1e-12}, {"fs", 1e-15}};
  const std::map<std::string_view, double, std::less<>>* table = nullptr;
  switch (d) {
  case Dim::length: table = &lengths; break;
  case Dim::angle: table = &angles; break;
  case Dim::time: table = &times; break;
  case Dim::angular_frequency:
    if (unit == "rad/s") return 1.0;
    return std::nullopt;
  default: return std::nullopt;
  }
  const auto it = table->find(unit);
  if (it == table->end()) return std::nullopt;
  return it->second;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

using Setter = std::function<void(RunConfig&, double, std::string_view)>;

struct KeySpec {
  Dim dim;
  Setter set;
};

const std::map<std::string, KeySpec, std::less<>>& key_table() {
  static const std::map<std::string, KeySpec, std::less<>> table{
      {"pump.lambda_p", {Dim::length, [](RunConfig& c, double v, auto) { c.pump.lambda_p = v; }}},
      {"pump.bandwidth", {Dim::length, [](RunConfig& c, double v, auto) { c.pump_bandwidth = v; }}},
      {"pump.delta_omega",
       {Dim::angular_frequency, [](RunConfig& c, double v, auto) {
          c.pump.delta_omega = v;
          c.pump_bandwidth = 0;
        }}},
      {"pump.sigma", {Dim::length, [](RunConfig& c, double v, auto) { c.pump.sigma = v; }}},
      {"filter_s.sigma_x", {Dim::length, [](RunConfig& c, double v, auto) { c.filter_s.sigma_x = v; }}},
      {"filter_s.sigma_y", {Dim::length, [](RunConfig& c, double v, auto) { c.filter_s.sigma_y = v; }}},
      {"filter_s.alpha", {Dim::time, [](RunConfig& c, double v, auto) { c.filter_s.alpha = v; }}},
      {"filter_i.sigma_x", {Dim::length, [](RunConfig& c, double v, auto) { c.filter_i.sigma_x = v; }}},
      {"filter_i.sigma_y", {Dim::length, [](RunConfig& c, double v, auto) { c.filter_i.sigma_y = v; }}},
      {"filter_i.alpha", {Dim::time, [](RunConfig& c, double v, auto) { c.filter_i.alpha = v; }}},
      {"geometry.L_D", {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.L_D = v; }}},
      {"geometry.phi_i", {Dim::angle, [](RunConfig& c, double v, auto) { c.geometry.phi_i = v; }}},
      {"geometry.phi_s", {Dim::angle, [](RunConfig& c, double v, auto) { c.geometry.phi_s = v; }}},
      {"geometry.d_i", {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.d_i = v; }}},
      {"geometry.d_s", {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.d_s = v; }}},
      {"geometry.ring_diameter",
       {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.ring_diameter = v; }}},
      {"geometry.ring_half_width",
       {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.ring_half_width = v; }}},
      {"geometry.pinhole_radius",
       {Dim::length, [](RunConfig& c, double v, auto) { c.geometry.pinhole_radius = v; }}},
      {"geometry.crystal_length",
       {Dim::length, [](RunConfig& c, double v, auto) { c.crystal_length = v; }}},
      {"grid.size",
       {Dim::integer, [](RunConfig& c, double v, auto) { c.grid.size = static_cast<std::size_t>(v); }}},
      {"grid.extent_sigmas", {Dim::number, [](RunConfig& c, double v, auto) { c.grid.extent_sigmas = v; }}},
      {"grid.dft_size",
       {Dim::integer,
        [](RunConfig& c, double v, auto) { c.grid.dft_size = static_cast<std::size_t>(v); }}},
      {"mc.samples",
       {Dim::integer,
        [](RunConfig& c, double v, auto) { c.mc.samples = static_cast<std::uint64_t>(v); }}},
      {"mc.seed",
       {Dim::integer, [](RunConfig& c, double v, auto) { c.mc.seed = static_cast<std::uint64_t>(v); }}},
      {"mc.size",
       {Dim::integer, [](RunConfig& c, double v, auto) { c.mc.size = static_cast<std::size_t>(v); }}},
      {"mc.extent", {Dim::length, [](RunConfig& c, double v, auto) { c.mc.extent = v; }}},
      {"output.dir",
       {Dim::text, [](RunConfig& c, double, std::string_view s) { c.output_dir = std::string(s); }}},
  };
  return table;
}

const std::vector<std::string>& required_keys() {
  static const std::vector<std::string> keys{
      "pump.lambda_p",        "pump.sigma",           "filter_s.sigma_x",
      "filter_s.sigma_y",     "filter_i.sigma_x",     "filter_i.sigma_y",
      "geometry.L_D",         "geometry.d_i",         "geometry.d_s",
      "geometry.ring_diameter", "geometry.ring_half_width", "geometry.pinhole_radius"};
  return keys;
}

/// Integers are exact up to 2^53 through the double path; seeds are parsed
/// separately so that full 64-bit values survive.
std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string unquote(std::string_view s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return std::string(s.substr(1, s.size() - 2));
  return std::string(s);
}

[[noreturn]] void fail(std::string_view where, std::string_view key, const std::string& msg) {
  std::ostringstream os;
  os << where << ": " << key << ": " << msg;
  throw ConfigError(os.str());
}

void assign(RunConfig& cfg, std::string_view key, std::string_view raw, std::string_view where) {
  const auto& table = key_table();
  const auto it = table.find(key);
  if (it == table.end()) fail(where, key, "unknown key");
  const KeySpec& spec = it->second;
  const std::string_view value = trim(raw);
  if (value.empty()) fail(where, key, "missing value");

  if (spec.dim == Dim::text) {
    spec.set(cfg, 0.0, unquote(value));
    return;
  }
  if (key == "mc.seed") {
    if (const auto v = parse_u64(value)) {
      cfg.mc.seed = *v;
      return;
    }
    fail(where, key, "expected an unsigned 64-bit integer, got '" + std::string(value) + "'");
  }

  const auto space = value.find_first_of(" \t");
  const std::string_view number = value.substr(0, space);
  const std::string_view unit = space == std::string_view::npos ? std::string_view{}
                                                                : trim(value.substr(space));
  double v = 0;
  const auto [p, ec] = std::from_chars(number.data(), number.data() + number.size(), v);
  if (ec != std::errc() || p != number.data() + number.size() || !std::isfinite(v))
    fail(where, key, "expected a number, got '" + std::string(number) + "'");
  const auto factor = unit_factor(spec.dim, unit);
  if (!factor) {
    if (spec.dim == Dim::number || spec.dim == Dim::integer)
      fail(where, key, "takes no unit, got '" + std::string(unit) + "'");
    fail(where, key, "unit '" + std::string(unit) + "' is not " + dim_name(spec.dim) + " unit");
  }
  v *= *factor;
  if (spec.dim == Dim::integer && (v < 0 || v != std::floor(v) || v > 9.007199254740992e15))
    fail(where, key, "expected a non-negative integer");
  spec.set(cfg, v, {});
}

void drop_synthetic(RunConfig& cfg, std::string_view key) {
  std::erase(cfg.synthetic_keys, std::string(key));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  assign(cfg, key, value, "override");
  drop_synthetic(cfg, key);
  if (key == "pump.bandwidth")
    cfg.pump.delta_omega = bandwidth_to_delta_omega(cfg.pump.lambda_p, cfg.pump_bandwidth);
}

void RunConfig::validate() const {
  try {
    pump.validate();
    filter_s.validate("filter_s");
    filter_i.validate("filter_i");
    geometry.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (grid.size < 2) throw ConfigError("grid.size must be >= 2");
  if (!(grid.extent_sigmas > 0)) throw ConfigError("grid.extent_sigmas must be > 0");
  if (!power_of_two(grid.dft_size) || grid.dft_size < 64)
    throw ConfigError("grid.dft_size must be a power of two >= 64");
  if (grid.dft_size < grid.size) throw ConfigError("grid.dft_size must be >= grid.size");
  if (mc.samples == 0) throw ConfigError("mc.samples must be > 0");
  if (mc.size < 2) throw ConfigError("mc.size must be >= 2");
  if (!(mc.extent >= 0)) throw ConfigError("mc.extent must be >= 0");
  if (output_dir.empty()) throw ConfigError("output.dir must not be empty");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {
      {"preset", preset},
      {"pump.lambda_p", pump.lambda_p},
      {"pump.bandwidth", pump_bandwidth},
      {"pump.delta_omega", pump.delta_omega},
      {"pump.sigma", pump.sigma},
      {"filter_s.sigma_x", filter_s.sigma_x},
      {"filter_s.sigma_y", filter_s.sigma_y},
      {"filter_s.alpha", filter_s.alpha},
      {"filter_i.sigma_x", filter_i.sigma_x},
      {"filter_i.sigma_y", filter_i.sigma_y},
      {"filter_i.alpha", filter_i.alpha},
      {"geometry.L_D", geometry.L_D},
      {"geometry.phi_i", geometry.phi_i},
      {"geometry.phi_s", geometry.phi_s},
      {"geometry.d_i", geometry.d_i},
      {"geometry.d_s", geometry.d_s},
      {"geometry.ring_diameter", geometry.ring_diameter},
      {"geometry.ring_half_width", geometry.ring_half_width},
      {"geometry.pinhole_radius", geometry.pinhole_radius},
      {"geometry.crystal_length", crystal_length},
      {"grid.size", grid.size},
      {"grid.extent_sigmas", grid.extent_sigmas},
      {"grid.dft_size", grid.dft_size},
      {"mc.samples", mc.samples},
      {"mc.seed", mc.seed},
      {"mc.size", mc.size},
      {"mc.extent", mc.extent},
  };
  j["synthetic_keys"] = synthetic_keys;
  return j;
}

std::string RunConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(to_json().dump())));
  return buf;
}

Axis RunConfig::mc_offsets(std::string name) const {
  const double extent =
      mc.extent > 0 ? mc.extent : geometry.ring_half_width + 2.0 * geometry.pinhole_radius;
  return Axis::symmetric(std::move(name), extent, mc.size);
}

std::vector<std::string> preset_names() { return {"bbo2009", "bbo2009-asym"}; }

RunConfig preset_config(std::string_view name) {
  if (name != "bbo2009" && name != "bbo2009-asym")
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  RunConfig c;
  c.preset = std::string(name);
  c.pump.lambda_p = 405.38e-9;
  c.pump_bandwidth = 0.78e-9;
  c.pump.delta_omega = bandwidth_to_delta_omega(c.pump.lambda_p, c.pump_bandwidth);
  // Model units: the xx-plane single-photon marginal has unit variance,
  // sigma^2 + sigma_filter^2 = 1.
  const double w = std::sqrt(0.5);
  c.pump.sigma = w;
  c.filter_s = {w, w, 0.0};
  c.filter_i = {w, w, 0.0};
  if (name == "bbo2009-asym") {
    c.filter_s = {0.5, 1.0, 0.0};
    c.filter_i = {0.5, 1.0, 0.0};
  }
  c.geometry.L_D = 0.849;
  c.geometry.d_i = 0.073;
  c.geometry.d_s = 0.068;
  c.geometry.phi_i = 85.98e-3;
  c.geometry.phi_s = 80.09e-3;
  c.geometry.ring_diameter = c.geometry.d_i + c.geometry.d_s;
  c.geometry.ring_half_width = 2e-3;
  c.geometry.pinhole_radius = 200e-6;
  c.crystal_length = 2e-3;
  c.synthetic_keys = {"pump.sigma",          "filter_s.sigma_x",       "filter_s.sigma_y",
                      "filter_s.alpha",      "filter_i.sigma_x",       "filter_i.sigma_y",
                      "filter_i.alpha",      "geometry.ring_diameter", "geometry.ring_half_width"};
  return c;
}

RunConfig parse_config(std::string_view text, std::string_view source) {
  struct Entry {
    std::string where;
    std::string key;
    std::string value;
  };
  std::vector<Entry> entries;
  std::set<std::string, std::less<>> seen;
  std::optional<std::string> preset;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      std::ostringstream os;
      os << where << ": expected 'key = value', got '" << line << "'";
      throw ConfigError(os.str());
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!seen.insert(key).second) fail(where, key, "duplicate key");
    if (key == "preset") {
      preset = unquote(value);
      continue;
    }
    entries.push_back({where, key, value});
  }

  RunConfig cfg;
  if (preset) {
    try {
      cfg = preset_config(*preset);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(source) + ": preset: " + e.what());
    }
  }
  for (const auto& e : entries) {
    assign(cfg, e.key, e.value, e.where);
    drop_synthetic(cfg, e.key);
  }

  if (seen.contains("pump.bandwidth") && seen.contains("pump.delta_omega"))
    throw ConfigError(std::string(source) +
                      ": pump.bandwidth and pump.delta_omega are mutually exclusive");

  if (!preset) {
    std::vector<std::string> missing;
    for (const auto& k : required_keys())
      if (!seen.contains(k)) missing.push_back(k);
    if (!seen.contains("pump.bandwidth") && !seen.contains("pump.delta_omega"))
      missing.push_back("pump.bandwidth|pump.delta_omega");
    if (!missing.empty()) {
      std::ostringstream os;
      os << source << ": missing required keys:";
      for (const auto& k : missing) os << " " << k;
      throw ConfigError(os.str());
    }
  }

  if (cfg.pump_bandwidth > 0 || seen.contains("pump.bandwidth")) {
    if (!(cfg.pump.lambda_p > 0)) throw ConfigError("pump.lambda_p must be > 0");
    cfg.pump.delta_omega = bandwidth_to_delta_omega(cfg.pump.lambda_p, cfg.pump_bandwidth);
  }
  // Cone angles follow the detector offsets unless given explicitly.
  auto derive = [&](std::string_view phi_key, std::string_view d_key, double d, double& phi) {
    const bool offsets_changed = !preset || seen.contains(d_key) || seen.contains("geometry.L_D");
    if (seen.contains(phi_key) || !offsets_changed) return;
    if (cfg.geometry.L_D > 0 && d >= 0) phi = cone_angle_from_offset(d, cfg.geometry.L_D);
  };
  derive("geometry.phi_i", "geometry.d_i", cfg.geometry.d_i, cfg.geometry.phi_i);
  derive("geometry.phi_s", "geometry.d_s", cfg.geometry.d_s, cfg.geometry.phi_s);

  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  return cfg;
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

RunConfig load_config(std::string_view path_or_preset) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), path_or_preset) != names.end())
    return preset_config(path_or_preset);
  return load_config_file(std::filesystem::path(path_or_preset));
}

} // namespace spdc
