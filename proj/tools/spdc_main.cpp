// Command-line driver: geometry numbers, quantum and ring-model coincidence
// maps, and the cross-model comparison.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spdc/config.hpp"
#include "spdc/errors.hpp"
#include "spdc/grid.hpp"
#include "spdc/runs.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string config;
  std::string preset;
  std::vector<std::string> planes;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::size_t> grid_size;
  std::optional<std::string> out;
};

spdc::RunConfig resolve(const Options& o) {
  if (!o.config.empty() && !o.preset.empty())
    throw spdc::ConfigError("--config and --preset are mutually exclusive");
  spdc::RunConfig cfg = !o.config.empty() ? spdc::load_config_file(o.config)
                                          : spdc::preset_config(o.preset.empty() ? "bbo2009"
                                                                                 : o.preset);
  if (o.seed) spdc::apply_setting(cfg, "mc.seed", std::to_string(*o.seed));
  if (o.samples) spdc::apply_setting(cfg, "mc.samples", std::to_string(*o.samples));
  if (o.grid_size) spdc::apply_setting(cfg, "grid.size", std::to_string(*o.grid_size));
  if (o.out) spdc::apply_setting(cfg, "output.dir", *o.out);
  cfg.validate();
  return cfg;
}

std::vector<spdc::Plane> resolve_planes(const Options& o) {
  if (o.planes.empty() || (o.planes.size() == 1 && o.planes.front() == "all"))
    return {std::begin(spdc::kAllPlanes), std::end(spdc::kAllPlanes)};
  std::vector<spdc::Plane> planes;
  try {
    for (const auto& p : o.planes) planes.push_back(spdc::parse_plane(p));
  } catch (const std::invalid_argument& e) {
    throw spdc::ConfigError(std::string("--plane: ") + e.what());
  }
  return planes;
}

void print_header(const spdc::RunConfig& cfg) {
  std::cout << "config " << cfg.hash();
  if (!cfg.preset.empty()) std::cout << " (preset " << cfg.preset << ")";
  std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial coincidence maps of type-I SPDC photon pairs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "Configuration file");
    sub->add_option("--preset", o.preset, "Named preset (bbo2009, bbo2009-asym)");
  };
  auto add_maps = [&o](CLI::App* sub) {
    sub->add_option("--plane", o.planes, "Planes: xx yy xy yx or all (repeatable)");
    sub->add_option("--out", o.out, "Output directory");
  };

  auto* pm = app.add_subcommand("pm", "Phase-matching geometry calculations");
  add_common(pm);
  auto* qmap = app.add_subcommand("qmap", "Quantum coincidence maps (analytic + DFT)");
  add_common(qmap);
  add_maps(qmap);
  qmap->add_option("--grid-size", o.grid_size, "Points per grid axis");
  auto* gmap = app.add_subcommand("gmap", "Monte Carlo ring-model coincidence maps");
  add_common(gmap);
  add_maps(gmap);
  gmap->add_option("--seed", o.seed, "Monte Carlo seed");
  gmap->add_option("--samples", o.samples, "Number of sampled pairs");
  auto* cmp = app.add_subcommand("compare", "Compare quantum and ring-model maps");
  add_common(cmp);
  add_maps(cmp);
  cmp->add_option("--seed", o.seed, "Monte Carlo seed");
  cmp->add_option("--samples", o.samples, "Number of sampled pairs");
  cmp->add_option("--grid-size", o.grid_size, "Points per quantum grid axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    const spdc::RunConfig cfg = resolve(o);
    print_header(cfg);
    if (*pm) {
      std::cout << spdc::format_geometry_table(cfg);
    } else if (*qmap) {
      const auto run = spdc::run_quantum_maps(cfg, resolve_planes(o));
      std::cout << spdc::format_quantum_table(run);
      std::cout << "wrote " << run.files.size() << " files to " << cfg.output_dir << "\n";
    } else if (*gmap) {
      const auto run = spdc::run_geometric_maps(cfg, resolve_planes(o));
      std::cout << spdc::format_geometric_table(run);
      std::cout << "wrote " << run.files.size() << " files to " << cfg.output_dir << "\n";
    } else if (*cmp) {
      const auto rep = spdc::run_compare(cfg, resolve_planes(o));
      std::cout << spdc::format_compare_table(rep);
      std::cout << "wrote " << rep.files.size() << " files to " << cfg.output_dir << "\n";
    }
  } catch (const spdc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const spdc::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const spdc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}
