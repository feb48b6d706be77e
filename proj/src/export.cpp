#include "spdc/export.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spdc/errors.hpp"

namespace spdc {

namespace {

std::string corner_cell(const AmplitudeGrid& g, const std::string& hash) {
  return "spdc-grid/" + std::to_string(kGridFormatVersion) + " cfg=" + hash + " " + g.axis1.name +
         "\\" + g.axis2.name;
}

template <class Cell>
std::string matrix_csv(const AmplitudeGrid& g, const std::string& hash, Cell cell) {
  std::string out = corner_cell(g, hash);
  for (std::size_t b = 0; b < g.axis2.count; ++b) out += "," + format_double(g.axis2[b]);
  out += "\r\n";
  for (std::size_t a = 0; a < g.axis1.count; ++a) {
    out += format_double(g.axis1[a]);
    for (std::size_t b = 0; b < g.axis2.count; ++b) out += "," + cell(a, b);
    out += "\r\n";
  }
  return out;
}

nlohmann::json axis_json(const Axis& a) {
  return {{"name", a.name}, {"start", a.start}, {"step", a.step}, {"count", a.count}};
}

double parse_double(std::string_view s, const std::string& where) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw IoError(where + ": malformed number '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    cells.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cells;
}

} // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string grid_csv(const AmplitudeGrid& g, const std::string& config_hash) {
  return matrix_csv(g, config_hash,
                    [&g](std::size_t a, std::size_t b) { return format_double(g.at(a, b)); });
}

std::string counts_csv(const CoincidenceMap& m, const std::string& config_hash) {
  return matrix_csv(m.grid, config_hash,
                    [&m](std::size_t a, std::size_t b) { return std::to_string(m.count(a, b)); });
}

nlohmann::json grid_sidecar(const AmplitudeGrid& g, const RunConfig& cfg) {
  return {{"format", "spdc-grid"},
          {"version", kGridFormatVersion},
          {"provenance", std::string(to_string(g.provenance))},
          {"axis1", axis_json(g.axis1)},
          {"axis2", axis_json(g.axis2)},
          {"layout", "row-major, axis1 rows"},
          {"mass", g.mass()},
          {"metadata", g.metadata},
          {"config_hash", cfg.hash()},
          {"config", cfg.to_json()}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

CsvGrid read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  CsvGrid g;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(row + 1);
    const auto cells = split(line);
    if (row == 0) {
      g.corner = std::string(cells.front());
      for (std::size_t k = 1; k < cells.size(); ++k) g.axis2.push_back(parse_double(cells[k], where));
    } else {
      if (cells.size() != g.axis2.size() + 1) throw IoError(where + ": wrong number of cells");
      g.axis1.push_back(parse_double(cells.front(), where));
      for (std::size_t k = 1; k < cells.size(); ++k) g.values.push_back(parse_double(cells[k], where));
    }
    ++row;
  }
  if (row == 0) throw IoError(path.string() + ": empty grid file");
  return g;
}

} // namespace spdc
