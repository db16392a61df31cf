#include "cspace/cli.hpp"

#include "cspace/oracle.hpp"

#include <cmath>
#include <ostream>

namespace cspace::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<double> theta_grid(std::size_t count) {
  std::vector<double> g;
  for (std::size_t k = 1; k <= count; ++k)
    g.push_back(static_cast<double>(k) * M_PI / static_cast<double>(count + 1));
  return g;
}

std::vector<double> phi_grid(std::size_t count) {
  std::vector<double> g;
  for (std::size_t k = 0; k < count; ++k)
    g.push_back(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count));
  return g;
}

}  // namespace

ResourceMPS load_resource(const std::string& spec_string, std::size_t n_sites) {
  if (spec_string == "aklt") return aklt(n_sites);
  if (spec_string == "cluster") return cluster_1d(n_sites);
  if (starts_with(spec_string, "file:"))
    return resource_from_file(spec_string.substr(5));
  throw std::invalid_argument("unknown resource: " + spec_string);
}

KrausChannel load_channel(const std::string& spec_string, double theta, double phi,
                          std::size_t dim) {
  if (spec_string == "f1") return f1_error(theta, phi);
  if (spec_string == "identity") return identity_channel(dim);
  if (starts_with(spec_string, "file:"))
    return channel_from_file(spec_string.substr(5));
  throw std::invalid_argument("unknown error channel: " + spec_string);
}

void apply_scenario_file(ScenarioConfig& cfg, const json& file,
                         const std::vector<std::string>& already_set) {
  if (!file.is_object()) throw std::invalid_argument("scenario file must hold a JSON object");
  const auto fixed = [&](const std::string& key) {
    for (const auto& k : already_set)
      if (k == key) return true;
    return false;
  };
  for (const auto& [key, value] : file.items()) {
    if (fixed(key)) continue;
    if (key == "resource") cfg.resource = value.get<std::string>();
    else if (key == "error") cfg.error = value.get<std::string>();
    else if (key == "theta") cfg.theta = value.get<double>();
    else if (key == "phi") cfg.phi = value.get<double>();
    else if (key == "r") cfg.r = value.get<int>();
    else if (key == "p") cfg.p = value.get<int>();
    else if (key == "q") cfg.q = value.get<int>();
    else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
    else if (key == "n") cfg.n = value.get<std::size_t>();
    else if (key == "trials") cfg.trials = value.get<std::size_t>();
    else if (key == "tol") cfg.tol = value.get<double>();
    else if (key == "grid_theta") cfg.grid_theta = value.get<std::size_t>();
    else if (key == "grid_phi") cfg.grid_phi = value.get<std::size_t>();
    else if (key == "scenario") cfg.classify_scenario = value.get<std::string>();
    else if (key == "outcome") cfg.outcome = value.get<int>();
    else if (key == "form") cfg.form = value.get<std::string>();
    else throw std::invalid_argument("scenario file: unknown field '" + key + "'");
  }
}

int run_validate(const ScenarioConfig& cfg, std::ostream& human, json& report) {
  const ResourceMPS mps = load_resource(cfg.resource, cfg.n);
  const ValidationReport vr = validate(mps, cfg.theta, cfg.phi, Tolerance(cfg.tol));
  report = validation_to_json(vr);
  report["schema_version"] = kSchemaVersion;
  report["resource"] = cfg.resource;
  report["theta"] = cfg.theta;
  report["phi"] = cfg.phi;
  if (vr.valid(Tolerance(cfg.tol))) {
    human << "valid: every branch unitary up to scale, C = " << vr.normalization_C
          << "\n";
    return kExitOk;
  }
  human << "invalid: branch '" << vr.first_failure()
        << "' is not unitary up to scale\n";
  return kExitInvalid;
}

int run_witness(const ScenarioConfig& cfg, std::ostream& human, json& report) {
  const ResourceMPS mps = load_resource(cfg.resource, cfg.n);
  const auto witness =
      find_nontp_witness(mps, theta_grid(cfg.grid_theta), phi_grid(cfg.grid_phi));
  report = json{{"schema_version", kSchemaVersion},
                {"resource", cfg.resource},
                {"grid", std::to_string(cfg.grid_theta) + "x" + std::to_string(cfg.grid_phi)}};
  if (!witness) {
    report["witness"] = nullptr;
    human << "no non-TP witness over the grid\n";
    return kExitNoWitness;
  }
  report["witness"] = witness_to_json(*witness);
  human << "witness: " << witness->proof_step << " violation " << witness->violation
        << " at theta=" << witness->theta << " phi=" << witness->phi
        << " outcome=" << witness->outcome << "\n";
  return kExitOk;
}

int run_aklt_mixing(const ScenarioConfig& cfg, std::ostream& human, json& report) {
  const ResourceMPS mps = aklt(cfg.n);
  const KrausChannel ch = load_channel(cfg.error, cfg.theta, cfg.phi);
  if (cfg.r < 1) throw std::invalid_argument("aklt-mixing: r must be >= 1");
  const SectorMap sm = sector_map(mps, ch, cfg.theta, cfg.phi,
                                  static_cast<std::size_t>(cfg.r), cfg.p, cfg.q);
  const MapClassification verdict = classify_sector(sm, Tolerance(cfg.tol));
  const double global_dev = global_tp_deviation(mps, ch, cfg.theta, cfg.phi,
                                                static_cast<std::size_t>(cfg.r));
  report = sector_to_json(sm);
  report["schema_version"] = kSchemaVersion;
  report["error"] = cfg.error;
  report["theta"] = cfg.theta;
  report["phi"] = cfg.phi;
  report["classification"] = classification_to_json(verdict);
  report["global_tp_deviation"] = global_dev;
  human << "sector (" << cfg.p << "," << cfg.q << ") r=" << cfg.r << ": verdict "
        << to_string(verdict.verdict) << ", scalar part "
        << report["scalar_part"].get<double>() << "\n";
  return kExitOk;
}

int run_classify(const ScenarioConfig& cfg, std::ostream& human, json& report) {
  const Tolerance tol(cfg.tol);
  MapClassification result;
  if (cfg.classify_scenario == "mixed" || cfg.classify_scenario == "outcome") {
    const ResourceMPS mps = load_resource(cfg.resource, cfg.n);
    const KrausChannel ch = load_channel(cfg.error, cfg.theta, cfg.phi, mps.d);
    const MeasurementBasis basis = MeasurementBasis::angled(cfg.theta, cfg.phi, mps.d);
    const InducedMap im = induced_kraus(mps, ch, basis);
    if (cfg.classify_scenario == "mixed") {
      result = classify(mixed_map(im), tol);
    } else {
      if (cfg.outcome < 0 || static_cast<std::size_t>(cfg.outcome) >= mps.d)
        throw std::invalid_argument("classify: outcome out of range");
      const ConditionalMap cm = per_outcome_map(im, static_cast<std::size_t>(cfg.outcome));
      if (cm.zero_branch) throw std::invalid_argument("classify: probability-0 outcome");
      if (cfg.form == "normalized")
        result = classify(cm.operator_normalized(), tol);
      else if (cfg.form == "renormalized")
        result = classify_operational(cm.renormalized(), mps.D, 24, tol, cfg.seed);
      else
        throw std::invalid_argument("classify: unknown form '" + cfg.form + "'");
    }
  } else if (cfg.classify_scenario == "sector") {
    const ResourceMPS mps = aklt(cfg.n);
    const KrausChannel ch = load_channel(cfg.error, cfg.theta, cfg.phi);
    const SectorMap sm = sector_map(mps, ch, cfg.theta, cfg.phi,
                                    static_cast<std::size_t>(cfg.r), cfg.p, cfg.q);
    result = classify_sector(sm, tol);
  } else {
    throw std::invalid_argument("classify: unknown scenario '" + cfg.classify_scenario + "'");
  }
  report = classification_to_json(result);
  report["schema_version"] = kSchemaVersion;
  report["scenario"] = cfg.classify_scenario;
  human << "verdict: " << to_string(result.verdict) << "\n";
  return kExitOk;
}

int run_oracle_check(const ScenarioConfig& cfg, std::ostream& human, json& report) {
  double worst = 0.0;
  json trials = json::array();
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t seed = cfg.seed * 1000 + trial;
    Rng rng(seed ^ 0xabcdef12345ull);
    const std::size_t d = trial % 2 == 0 ? 3 : 2;
    const double theta = 0.3 + 2.2 * rng.uniform();
    const double phi = 2.0 * M_PI * rng.uniform();
    const ResourceMPS mps = random_resource(d, 2, theta, phi, seed, cfg.n);
    const KrausChannel ch = random_cptp(d, 1 + trial % 3, seed + 17);
    const double btheta = 0.3 + 2.2 * rng.uniform();
    const double bphi = 2.0 * M_PI * rng.uniform();
    const MeasurementBasis basis = MeasurementBasis::angled(btheta, bphi, d);

    const Reconstruction rec = reconstruct_induced_map(mps, ch, basis);
    const CMatrix analytic = choi(mixed_map(induced_kraus(mps, ch, basis))).matrix;
    const CMatrix dense = choi(rec.map).matrix;
    const double dist = frobenius_distance(analytic, dense);
    worst = std::max(worst, dist);
    trials.push_back(json{{"seed", seed},
                          {"d", d},
                          {"choi_distance", dist},
                          {"condition_number", rec.condition_number}});
  }
  report = json{{"schema_version", kSchemaVersion},
                {"n", cfg.n},
                {"trials", trials},
                {"max_choi_distance", worst}};
  human << "max Choi distance " << worst << " over " << cfg.trials << " trials\n";
  return worst <= 1e-8 ? kExitOk : kExitInvalid;
}

}  // namespace cspace::cli
