#pragma once

#include <string>

#include "json.hpp"

#include "hecke/gg.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/modules.hpp"
#include "hecke/star_solver.hpp"

namespace hecke {

// Deterministic text and JSON renderings of the report structures. All maps
// are ordered, so output is byte-identical across runs for a fixed config.

nlohmann::json params_json(const HeckeParams& params);

nlohmann::json relation_report_json(const RelationReport& report);
std::string relation_report_text(const RelationReport& report);

nlohmann::json star_report_json(const StarReport& report);
std::string star_report_text(const StarReport& report);

nlohmann::json classify_report_json(const HeckeParams& params, const LaurentPoly& input,
                                    const ClassifyResult& result);
std::string classify_report_text(const HeckeParams& params, const LaurentPoly& input,
                                 const ClassifyResult& result);

nlohmann::json gg_report_json(const GGReport& report);
std::string gg_report_text(const GGReport& report);

}  // namespace hecke
