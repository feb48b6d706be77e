#include "spdc/runs.hpp"

#include <cmath>
#include <cstdio>

#include "spdc/export.hpp"
#include "spdc/position_amplitude.hpp"

namespace spdc {

namespace fs = std::filesystem;

namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

void export_grid(const AmplitudeGrid& g, const RunConfig& cfg, const std::string& stem,
                 std::vector<fs::path>& files) {
  const fs::path dir(cfg.output_dir);
  const std::string hash = cfg.hash();
  write_text(dir / (stem + ".csv"), grid_csv(g, hash));
  write_json(dir / (stem + ".json"), grid_sidecar(g, cfg));
  files.push_back(dir / (stem + ".csv"));
  files.push_back(dir / (stem + ".json"));
}

nlohmann::json provenance_block(const RunConfig& cfg) {
  return {{"config_hash", cfg.hash()},
          {"preset", cfg.preset},
          {"synthetic_keys", cfg.synthetic_keys},
          {"units", "quantum widths in model units; geometry in SI"},
          {"config", cfg.to_json()}};
}

std::string orientation_text(const EllipseSummary& e) {
  if (e.aspect_ratio < kIsotropicAspect) return "  circular";
  return fmt("%10.3f", e.orientation);
}

} // namespace

QuantumRun run_quantum_maps(const RunConfig& cfg, std::span<const Plane> planes, bool write) {
  cfg.validate();
  const QuantumParams params = cfg.quantum();
  QuantumRun run;
  run.summary = provenance_block(cfg);
  for (Plane plane : planes) {
    const auto [a1, a2] = default_plane_axes(plane, params, cfg.grid.size, cfg.grid.extent_sigmas);
    QuantumPlaneResult r;
    r.plane = plane;
    r.analytic = analytic_position_density(plane, a1, a2, params);
    r.numeric = numeric_position_density(plane, a1, a2, params, cfg.grid.dft_size);
    r.analytic_summary = moments(r.analytic);
    r.numeric_summary = moments(r.numeric);
    r.max_rel_deviation = max_relative_deviation(r.numeric, r.analytic);
    r.l2 = compare_maps(r.analytic, r.numeric).l2;

    const std::string name(to_string(plane));
    run.summary["planes"][name] = {{"analytic", to_json(r.analytic_summary)},
                                   {"numeric", to_json(r.numeric_summary)},
                                   {"orientation_deg", r.analytic_summary.orientation},
                                   {"circular", r.analytic_summary.aspect_ratio < kIsotropicAspect},
                                   {"max_rel_deviation", r.max_rel_deviation},
                                   {"l2", r.l2}};
    if (write) {
      export_grid(r.analytic, cfg, "q_" + name + "_analytic", run.files);
      export_grid(r.numeric, cfg, "q_" + name + "_numeric", run.files);
    }
    run.planes.push_back(std::move(r));
  }
  if (write) {
    const fs::path path = fs::path(cfg.output_dir) / "qmap_summary.json";
    write_json(path, run.summary);
    run.files.push_back(path);
  }
  return run;
}

GeometricRun run_geometric_maps(const RunConfig& cfg, std::span<const Plane> planes, bool write) {
  cfg.validate();
  GeometricRun run;
  run.summary = provenance_block(cfg);
  run.summary["seed"] = cfg.mc.seed;
  run.summary["n_samples"] = cfg.mc.samples;
  for (Plane plane : planes) {
    const auto [n1, n2] = plane_axis_names(plane);
    SweepSpec spec{plane, cfg.mc_offsets(n1), cfg.mc_offsets(n2), cfg.mc.samples, cfg.mc.seed};
    GeometricPlaneResult r{plane, run_sweep(spec, cfg.geometry), std::nullopt};
    if (!r.map.no_coincidences) r.summary = moments(r.map.grid);

    const std::string name(to_string(plane));
    nlohmann::json entry = {{"no_coincidences", r.map.no_coincidences}};
    if (r.summary) {
      entry["summary"] = to_json(*r.summary);
      entry["orientation_deg"] = r.summary->orientation;
      entry["circular"] = r.summary->aspect_ratio < kIsotropicAspect;
    }
    run.summary["planes"][name] = entry;
    if (write) {
      export_grid(r.map.grid, cfg, "g_" + name, run.files);
      const fs::path counts = fs::path(cfg.output_dir) / ("g_" + name + "_counts.csv");
      write_text(counts, counts_csv(r.map, cfg.hash()));
      run.files.push_back(counts);
    }
    run.planes.push_back(std::move(r));
  }
  if (write) {
    const fs::path path = fs::path(cfg.output_dir) / "gmap_summary.json";
    write_json(path, run.summary);
    run.files.push_back(path);
  }
  return run;
}

CompareReport run_compare(const RunConfig& cfg, std::span<const Plane> planes, bool write) {
  const QuantumRun q = run_quantum_maps(cfg, planes, false);
  const GeometricRun g = run_geometric_maps(cfg, planes, false);
  CompareReport rep;
  rep.report = provenance_block(cfg);
  rep.report["seed"] = cfg.mc.seed;
  rep.report["n_samples"] = cfg.mc.samples;
  for (std::size_t k = 0; k < q.planes.size(); ++k) {
    const auto& qp = q.planes[k];
    const auto& gp = g.planes[k];
    CompareRow row;
    row.plane = qp.plane;
    row.analytic_vs_numeric = compare_maps(qp.analytic, qp.numeric);
    row.max_rel_deviation = qp.max_rel_deviation;
    nlohmann::json entry = {{"analytic_vs_numeric", to_json(row.analytic_vs_numeric)},
                            {"max_rel_deviation", row.max_rel_deviation}};
    if (gp.summary) {
      // Quantum maps are in model units, MC maps in metres.
      row.quantum_vs_mc = compare_maps(standardize(qp.analytic), standardize(gp.map.grid));
      const auto& c = *row.quantum_vs_mc;
      row.circular = c.first.aspect_ratio < kIsotropicAspect;
      row.agrees = row.circular ? std::abs(c.second.correlation) < kCircularCorrelationTol
                                : c.d_orientation < kOrientationTolDeg;
      entry["quantum_vs_mc"] = to_json(c);
    }
    entry["circular"] = row.circular;
    entry["agrees"] = row.agrees;
    rep.report["planes"][std::string(to_string(qp.plane))] = entry;
    rep.rows.push_back(std::move(row));
  }
  if (write) {
    const fs::path path = fs::path(cfg.output_dir) / "compare_report.json";
    write_json(path, rep.report);
    rep.files.push_back(path);
  }
  return rep;
}

std::string format_quantum_table(const QuantumRun& run) {
  std::string out = "plane  orient_deg  aspect   corr       max_rel_dev  l2\n";
  for (const auto& r : run.planes)
    out += fmt("%-5s %s  %7.4f  %8.5f  %11.3e  %9.3e\n", std::string(to_string(r.plane)).c_str(),
               orientation_text(r.analytic_summary).c_str(), r.analytic_summary.aspect_ratio,
               r.analytic_summary.correlation, r.max_rel_deviation, r.l2);
  return out;
}

std::string format_geometric_table(const GeometricRun& run) {
  std::string out = "plane  orient_deg  aspect   corr      total_counts\n";
  for (const auto& r : run.planes) {
    std::uint64_t total = 0;
    for (auto c : r.map.counts) total += c;
    if (!r.summary) {
      out += fmt("%-5s  no coincidences\n", std::string(to_string(r.plane)).c_str());
      continue;
    }
    out += fmt("%-5s %s  %7.4f  %8.5f  %llu\n", std::string(to_string(r.plane)).c_str(),
               orientation_text(*r.summary).c_str(), r.summary->aspect_ratio,
               r.summary->correlation, static_cast<unsigned long long>(total));
  }
  return out;
}

std::string format_compare_table(const CompareReport& report) {
  std::string out =
      "plane  q_orient    mc_orient   d_orient  an/num_l2   an/num_rel  q/mc_l2   agree\n";
  for (const auto& r : report.rows) {
    const auto name = std::string(to_string(r.plane));
    if (!r.quantum_vs_mc) {
      out += fmt("%-5s %s  (no MC coincidences)  %9.3e  %9.3e\n", name.c_str(),
                 orientation_text(r.analytic_vs_numeric.first).c_str(), r.analytic_vs_numeric.l2,
                 r.max_rel_deviation);
      continue;
    }
    const auto& c = *r.quantum_vs_mc;
    const std::string d = r.circular ? "     n/a" : fmt("%8.3f", c.d_orientation);
    out += fmt("%-5s %s  %s  %s  %9.3e  %9.3e  %8.4f  %s\n", name.c_str(),
               orientation_text(c.first).c_str(), orientation_text(c.second).c_str(), d.c_str(),
               r.analytic_vs_numeric.l2, r.max_rel_deviation, c.l2, r.agrees ? "yes" : "no");
  }
  return out;
}

std::string format_geometry_table(const RunConfig& cfg) {
  const ExperimentGeometry& g = cfg.geometry;
  std::string out;
  out += fmt("%-34s %14.6f nm\n", "pump wavelength", cfg.pump.lambda_p * 1e9);
  out += fmt("%-34s %14.6f nm\n", "degenerate signal/idler wavelength",
             degenerate_wavelength(cfg.pump) * 1e9);
  out += fmt("%-34s %14.6e rad/s\n", "pump delta_omega", cfg.pump.delta_omega);
  out += fmt("%-34s %14.6f m\n", "crystal-to-detector distance L_D", g.L_D);
  out += fmt("%-34s %14.4f mrad\n", "idler cone angle from d_i",
             cone_angle_from_offset(g.d_i, g.L_D) * 1e3);
  out += fmt("%-34s %14.4f mrad\n", "signal cone angle from d_s",
             cone_angle_from_offset(g.d_s, g.L_D) * 1e3);
  out += fmt("%-34s %14.4f mrad\n", "configured phi_i", g.phi_i * 1e3);
  out += fmt("%-34s %14.4f mrad\n", "configured phi_s", g.phi_s * 1e3);
  out += fmt("%-34s %14.6f m\n", "idler ring radius at phi_i", ring_radius(g, g.phi_i));
  out += fmt("%-34s %14.6f m\n", "signal ring radius at phi_s", ring_radius(g, g.phi_s));
  out += fmt("%-34s %14.6f m\n", "ring diameter", g.ring_diameter);
  out += fmt("%-34s %14.6f m\n", "ring half width", g.ring_half_width);
  out += fmt("%-34s %14.6f m\n", "pinhole radius", g.pinhole_radius);
  return out;
}

} // namespace spdc
