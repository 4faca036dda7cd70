// casimir -- batch front end for fluctuation-induced interaction energies.
//
// Usage:
//   casimir <energy|force|sweep|series|validate> --config scene.json
//           [--out result.csv] [--threads N]
//
// Scenes are JSON documents validated against schema/casimir_scene.schema.json;
// results are CSV on stdout (or --out). The validate task needs no config.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "casimir/parallel.hpp"
#include "casimir/scene.hpp"

namespace {

int run_with_output(const casimir::SceneConfig& config, const std::string& out_path) {
  if (out_path.empty()) return casimir::run_task(config, std::cout);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 1;
  }
  return casimir::run_task(config, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak-coupling Casimir energies for scalar, EM and Proca fluctuations"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  int threads = 0;

  const char* names[] = {"energy", "force", "sweep", "series", "validate"};
  const casimir::Task tasks[] = {casimir::Task::Energy, casimir::Task::Force,
                                 casimir::Task::Sweep, casimir::Task::Series,
                                 casimir::Task::Validate};
  const char* descs[] = {
      "two-body interaction energy",
      "force along the line of centers (negative = attraction)",
      "energy over a grid of the sweep parameter",
      "per-order susceptibility expansion plus the log-det resummation",
      "run the full engine-vs-oracle check suite",
  };

  casimir::Task selected = casimir::Task::Validate;
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--config", config_path, "scene JSON file");
    sub->add_option("--out", out_path, "write CSV here instead of stdout");
    sub->add_option("--threads", threads, "worker thread budget");
    const casimir::Task task = tasks[i];
    sub->callback([&selected, task]() { selected = task; });
  }

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) casimir::set_max_threads(threads);

  if (selected == casimir::Task::Validate && config_path.empty()) {
    casimir::SceneConfig config;
    config.task = casimir::Task::Validate;
    return run_with_output(config, out_path);
  }

  if (config_path.empty()) {
    std::cerr << "error: this task requires --config <scene.json>\n";
    return 2;
  }
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config file " << config_path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  casimir::ParseOutcome parsed = casimir::parse_config(buffer.str());
  if (!parsed.config) {
    for (const std::string& e : parsed.errors) std::cerr << "config error: " << e << "\n";
    return 2;
  }
  casimir::SceneConfig config = *parsed.config;
  config.task = selected;
  return run_with_output(config, out_path);
}
