#include "cspace/json_io.hpp"

#include <fstream>

namespace cspace {

using nlohmann::json;

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json out = json::array();
  for (const auto& x : v.entries) out.push_back(to_json(x));
  return out;
}

json to_json(const CMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex scalar must be a [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

CVector cvector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = cplx_from_json(j[i]);
  return v;
}

CMatrix cmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = cplx_from_json(j[i][c]);
  }
  return m;
}

json resource_to_json(const ResourceMPS& mps) {
  json tensors = json::array();
  for (const auto& t : mps.tensors) tensors.push_back(to_json(t));
  return json{{"d", mps.d},          {"D", mps.D},
              {"tensors", tensors},  {"left", to_json(mps.left)},
              {"right", to_json(mps.right)}, {"n_sites", mps.n_sites}};
}

ResourceMPS resource_from_json(const json& j) {
  ResourceMPS mps;
  mps.d = j.at("d").get<std::size_t>();
  mps.D = j.at("D").get<std::size_t>();
  for (const auto& t : j.at("tensors")) mps.tensors.push_back(cmatrix_from_json(t));
  mps.left = cvector_from_json(j.at("left"));
  mps.right = cvector_from_json(j.at("right"));
  mps.n_sites = j.at("n_sites").get<std::size_t>();
  mps.check();
  return mps;
}

json channel_to_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (const auto& f : ch.kraus) kraus.push_back(to_json(f));
  return json{{"dim", ch.dim}, {"kraus", kraus}};
}

KrausChannel channel_from_json(const json& j) {
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<CMatrix> ops;
  for (const auto& f : j.at("kraus")) ops.push_back(cmatrix_from_json(f));
  return KrausChannel(dim, std::move(ops));
}

json validation_to_json(const ValidationReport& report) {
  json branches = json::array();
  for (const auto& b : report.branches) {
    json entry{{"name", b.name}, {"unitary", b.unitary}};
    if (b.unitary) entry["scale"] = b.scale;
    branches.push_back(std::move(entry));
  }
  return json{{"branches", branches},
              {"C", report.normalization_C},
              {"valid", report.valid()},
              {"first_failure", report.first_failure()}};
}

json classification_to_json(const MapClassification& c) {
  return json{{"verdict", to_string(c.verdict)},
              {"tp_deviation", c.tp_deviation},
              {"cp_min_eigenvalue", c.cp_min_eigenvalue},
              {"linearity_deviation", c.linearity_deviation}};
}

json witness_to_json(const Witness& w) {
  json out{{"channel", channel_to_json(w.channel)},
           {"theta", w.theta},
           {"phi", w.phi},
           {"outcome", w.outcome},
           {"violation", w.violation},
           {"proof_step", w.proof_step}};
  if (w.s >= 0) out["s"] = w.s;
  if (w.t >= 0) out["t"] = w.t;
  return out;
}

json sector_to_json(const SectorMap& sm) {
  const auto eigs = hermitian_eigenvalues(sm.gram);
  const double scalar_part = eigs.front();
  const CMatrix excess =
      sm.gram - cplx(scalar_part) * CMatrix::identity(sm.gram.rows);
  return json{{"p", sm.sector.p},
              {"q", sm.sector.q},
              {"r", sm.r},
              {"kraus_count", sm.kraus_like.size()},
              {"gram", to_json(sm.gram)},
              {"scalar_part", scalar_part},
              {"off_identity", to_json(excess)}};
}

json json_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

ResourceMPS resource_from_file(const std::string& path) {
  return resource_from_json(json_from_file(path));
}

KrausChannel channel_from_file(const std::string& path) {
  return channel_from_json(json_from_file(path));
}

}  // namespace cspace
