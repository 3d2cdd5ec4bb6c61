// jackson_lab: run inequality checks from a JSON config, list or describe them.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "jackson/experiment.hpp"

namespace {

constexpr int exit_config = 2;

int list_checks() {
  for (const auto& e : jackson::lab::registry()) std::printf("%-16s %s\n", e.id.c_str(), e.anchor.c_str());
  return 0;
}

int describe(const std::string& id) {
  const auto* e = jackson::lab::find_check(id);
  if (!e) {
    std::cerr << "error: unknown check id '" << id << "' (see --list)\n";
    return exit_config;
  }
  std::cout << e->id << ": " << e->anchor << "\n\n" << e->describe << "\n";
  return 0;
}

int run(const std::string& path, const jackson::Overrides& over, unsigned jobs) {
  using namespace jackson;
  ExperimentResult res;
  try {
    auto cfg = load_config(path);
    apply(cfg, over);
    res = run_experiment(cfg, jobs);
    for (const auto& r : res.reports)
      std::printf("%-16s %-4s constant=%s spread=%s  %.0f ms\n", r.id.c_str(), r.pass ? "pass" : "FAIL",
                  lab::fmt(r.constant).c_str(), lab::fmt(r.spread).c_str(), r.runtime_ms);
    std::printf("wrote %zu files to %s\n", res.files.size(), cfg.out.string().c_str());
  } catch (const std::invalid_argument& e) {
    // ParamError names the field, UnknownCheck the id
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Jackson inequality workbench"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool list = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  app.add_flag("--list", list, "List registered checks with their anchors");
  app.add_option("--jobs", jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Override the config seed");
  app.add_option("--out", out, "Override the output directory");

  std::string config, id;
  auto* run_cmd = app.add_subcommand("run", "Run the checks of a config file");
  run_cmd->add_option("config", config, "Experiment config (JSON)")->required();
  auto* desc_cmd = app.add_subcommand("describe", "Show formulas, parameters and defaults of a check");
  desc_cmd->add_option("id", id, "Check id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_config;
  }

  if (list) return list_checks();
  if (*desc_cmd) return describe(id);
  if (*run_cmd) {
    jackson::Overrides over;
    over.seed = seed;
    if (out) over.out = *out;
    return run(config, over, jobs);
  }
  std::cerr << app.help();
  return exit_config;
}
