#pragma once

#include "cspace/cptp.hpp"
#include "cspace/mixing.hpp"
#include "cspace/resource.hpp"
#include "cspace/theorem.hpp"

#include <json.hpp>

#include <string>

namespace cspace {

// Complex scalars serialize as two-element arrays [re, im] everywhere.

nlohmann::json to_json(const cplx& z);
nlohmann::json to_json(const CVector& v);
nlohmann::json to_json(const CMatrix& m);
cplx cplx_from_json(const nlohmann::json& j);
CVector cvector_from_json(const nlohmann::json& j);
CMatrix cmatrix_from_json(const nlohmann::json& j);

/// { "d": int, "D": int, "tensors": [...], "left": [...], "right": [...],
///   "n_sites": int }
nlohmann::json resource_to_json(const ResourceMPS& mps);
ResourceMPS resource_from_json(const nlohmann::json& j);

/// { "dim": int, "kraus": [...] }
nlohmann::json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json classification_to_json(const MapClassification& c);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json sector_to_json(const SectorMap& sm);

ResourceMPS resource_from_file(const std::string& path);
KrausChannel channel_from_file(const std::string& path);
nlohmann::json json_from_file(const std::string& path);

}  // namespace cspace
