#pragma once

#include <string>

#include <json.hpp>

#include "halfperm/rmt/experiments.hpp"

namespace halfperm {

nlohmann::json config_to_json(const EnsembleConfig& cfg);
nlohmann::json report_to_json(const MomentReport& r);
// Header row, then one record per covariance pair.
std::string report_csv(const MomentReport& r);
// Numbers rendered exactly as in the JSON form.
std::string report_text(const MomentReport& r);

}  // namespace halfperm
