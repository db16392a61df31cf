#include "cspace/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using cspace::cli::ScenarioConfig;

int dispatch(const std::string& command, ScenarioConfig& cfg,
             const std::vector<std::string>& set_keys,
             const std::string& scenario_file) {
  using namespace cspace::cli;
  try {
    if (!scenario_file.empty())
      apply_scenario_file(cfg, cspace::json_from_file(scenario_file), set_keys);

    nlohmann::json report;
    int code = kExitInputError;
    if (command == "validate") code = run_validate(cfg, std::cerr, report);
    else if (command == "witness") code = run_witness(cfg, std::cerr, report);
    else if (command == "aklt-mixing") code = run_aklt_mixing(cfg, std::cerr, report);
    else if (command == "classify") code = run_classify(cfg, std::cerr, report);
    else if (command == "oracle-check") code = run_oracle_check(cfg, std::cerr, report);

    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      if (!out) throw std::runtime_error("cannot write " + cfg.out_path);
      out << text;
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation-space simulator for matrix-product resource states"};
  app.require_subcommand(1);

  ScenarioConfig cfg;
  if (const char* env_tol = std::getenv("CSPACE_TOL")) cfg.tol = std::atof(env_tol);
  std::string scenario_file;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "verification tolerance");
    sub->add_option("--out", cfg.out_path, "write the JSON report to this path");
    sub->add_option("--scenario-file", scenario_file, "JSON file with parameters");
  };

  auto* validate = app.add_subcommand("validate", "check the resource assumption");
  validate->add_option("--resource", cfg.resource);
  validate->add_option("--theta", cfg.theta);
  validate->add_option("--phi", cfg.phi);
  add_common(validate);

  auto* witness = app.add_subcommand("witness", "search the proof-error families");
  witness->add_option("--resource", cfg.resource);
  std::string grid;
  witness->add_option("--grid", grid, "theta x phi grid, e.g. 8x16");
  add_common(witness);

  auto* mixing = app.add_subcommand("aklt-mixing", "byproduct-sector map on the AKLT chain");
  mixing->add_option("--error", cfg.error);
  mixing->add_option("--theta", cfg.theta);
  mixing->add_option("--phi", cfg.phi);
  mixing->add_option("--r", cfg.r);
  mixing->add_option("--p", cfg.p);
  mixing->add_option("--q", cfg.q);
  add_common(mixing);

  auto* classify = app.add_subcommand("classify", "classify an induced map");
  classify->add_option("--scenario", cfg.classify_scenario, "mixed | outcome | sector");
  classify->add_option("--resource", cfg.resource);
  classify->add_option("--error", cfg.error);
  classify->add_option("--theta", cfg.theta);
  classify->add_option("--phi", cfg.phi);
  classify->add_option("--outcome", cfg.outcome);
  classify->add_option("--form", cfg.form, "normalized | renormalized");
  classify->add_option("--r", cfg.r);
  classify->add_option("--p", cfg.p);
  classify->add_option("--q", cfg.q);
  classify->add_option("--seed", cfg.seed);
  add_common(classify);

  auto* oracle = app.add_subcommand("oracle-check", "dense reconstruction vs analytic map");
  oracle->add_option("--n", cfg.n);
  oracle->add_option("--seed", cfg.seed);
  oracle->add_option("--trials", cfg.trials);
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cspace::cli::kExitInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (!grid.empty()) {
    const auto x = grid.find('x');
    if (x == std::string::npos) {
      std::cerr << "error: --grid expects TxP, e.g. 8x16\n";
      return cspace::cli::kExitInputError;
    }
    cfg.grid_theta = std::stoul(grid.substr(0, x));
    cfg.grid_phi = std::stoul(grid.substr(x + 1));
  }

  // Flags given on the command line keep priority over the scenario file.
  std::vector<std::string> set_keys;
  const auto mark = [&](const char* flag, const char* key) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt && opt->count() > 0) set_keys.push_back(key);
  };
  mark("--resource", "resource");
  mark("--error", "error");
  mark("--theta", "theta");
  mark("--phi", "phi");
  mark("--r", "r");
  mark("--p", "p");
  mark("--q", "q");
  mark("--seed", "seed");
  mark("--n", "n");
  mark("--trials", "trials");
  mark("--tol", "tol");
  mark("--scenario", "scenario");
  mark("--outcome", "outcome");
  mark("--form", "form");

  return dispatch(sub->get_name(), cfg, set_keys, scenario_file);
}
