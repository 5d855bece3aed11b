#pragma once

// JSON views of the verifier reports (nlohmann ADL hooks). Reals are rounded
// to 12 significant digits so reports diff cleanly.

#include <json.hpp>

#include "kst/majorization.hpp"
#include "kst/minor.hpp"
#include "kst/search.hpp"
#include "kst/spectral_bounds.hpp"

namespace kst {

double round12(double x);

void to_json(nlohmann::json& j, const FstSandwichReport& r);
void to_json(nlohmann::json& j, const NearCliqueCubicReport& r);
void to_json(nlohmann::json& j, const RegularJoinReport& r);
void to_json(nlohmann::json& j, const JoinLowerBoundReport& r);
void to_json(nlohmann::json& j, const PerronBoundsReport& r);
void to_json(nlohmann::json& j, const CliqueReductionReport& r);
void to_json(nlohmann::json& j, const ComplementCriterionReport& r);
void to_json(nlohmann::json& j, const StarMinorEdgeReport& r);
void to_json(nlohmann::json& j, const MajorizationSuiteReport& r);
void to_json(nlohmann::json& j, const RotationSuiteReport& r);
void to_json(nlohmann::json& j, const SearchResult& r);
void to_json(nlohmann::json& j, const EdgeMaximumReport& r);
void to_json(nlohmann::json& j, const TwoExtraVertexReport& r);
void to_json(nlohmann::json& j, const LocalMaximalityReport& r);
void to_json(nlohmann::json& j, const ComponentCensus& c);
void to_json(nlohmann::json& j, const StructureReport& r);

/// Flat "key,value" header plus one row for the scalar members of a report.
std::string to_csv(const nlohmann::json& report);

}  // namespace kst
