#pragma once

#include "cspace/json_io.hpp"

#include <cmath>
#include <iosfwd>
#include <string>

namespace cspace::cli {

/// Parameter record shared by all subcommands; validated before dispatch.
struct ScenarioConfig {
  std::string resource = "aklt";     // "aklt", "cluster", or "file:PATH"
  std::string error = "f1";          // "f1", "identity", or "file:PATH"
  double theta = M_PI / 2.0;
  double phi = M_PI / 2.0;
  int r = 3;
  int p = 1;
  int q = 0;
  std::size_t grid_theta = 8;
  std::size_t grid_phi = 16;
  std::uint64_t seed = 0;
  std::size_t n = 4;
  std::size_t trials = 5;
  double tol = 1e-9;
  std::string out_path;
  std::string classify_scenario = "mixed";  // "mixed", "outcome", "sector"
  int outcome = 2;
  std::string form = "renormalized";  // or "normalized"
};

/// Scenario-file keys mirror the flag names; unknown keys are rejected.
/// `already_set` lists keys fixed on the command line which keep priority.
void apply_scenario_file(ScenarioConfig& cfg, const nlohmann::json& file,
                         const std::vector<std::string>& already_set);

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;      // resource fails validation
constexpr int kExitInputError = 2;   // bad flags / malformed files
constexpr int kExitNoWitness = 3;

int run_validate(const ScenarioConfig& cfg, std::ostream& human, nlohmann::json& report);
int run_witness(const ScenarioConfig& cfg, std::ostream& human, nlohmann::json& report);
int run_aklt_mixing(const ScenarioConfig& cfg, std::ostream& human, nlohmann::json& report);
int run_classify(const ScenarioConfig& cfg, std::ostream& human, nlohmann::json& report);
int run_oracle_check(const ScenarioConfig& cfg, std::ostream& human, nlohmann::json& report);

ResourceMPS load_resource(const std::string& spec_string, std::size_t n_sites = 4);
KrausChannel load_channel(const std::string& spec_string, double theta, double phi,
                          std::size_t dim = 3);

}  // namespace cspace::cli
