#pragma once

// nlohmann-backed encoders and decoders shared by io.cpp and service.cpp.
// Not installed; the public surface is clic/io.hpp.

#include "clic/io.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace clic::codec {

using Json = nlohmann::ordered_json;

/// Syntax errors become ErrorKind::parse with "line L, column C".
Json parse_document(std::string_view text);

[[noreturn]] void fail(const std::string& path, const std::string& message);

void expect_object(const Json& v, const std::string& path);
const Json& require(const Json& obj, std::string_view key, const std::string& path);
const Json* find(const Json& obj, std::string_view key);

double number(const Json& v, const std::string& path);
std::int64_t integer(const Json& v, const std::string& path);
std::string string(const Json& v, const std::string& path);
bool boolean(const Json& v, const std::string& path);
Quadrant quadrant(const Json& v, const std::string& path);

Portfolio portfolio_from_json(const Json& j, const std::string& path = "");
Json to_json(const Portfolio& portfolio);

IndustryRegistry registry_from_json(const Json& j, const std::string& path = "");
Json to_json(const IndustryRegistry& registry);

ProviderProfile provider_from_json(const Json& j, const std::string& path = "");
Json to_json(const ProviderProfile& provider);

QuadrantCounts counts_from_json(const Json& j, const std::string& path);
Json to_json(const QuadrantCounts& counts);

DeploymentRecord record_from_json(const Json& j, const std::string& path);
EffortCurve curve_from_json(const Json& j, const std::string& path = "");
NfrProfile nfr_from_json(const Json& j, const std::string& path);
Json to_json(const NfrProfile& nfr);
std::vector<NfrEntry> nfr_table_from_json(const Json& j);

Move move_from_json(const Json& j, const std::string& path);
std::vector<Move> moves_from_json(const Json& j, const std::string& path);

EffortConventions conventions_from_json(const Json& j, const std::string& path,
                                        EffortConventions base = {});

Json to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const Json& j);

Json to_json(const WhatIfDelta& delta, const EffortConventions& conventions);
Json to_json(const KCalibration& calibration);
Json to_json(const PlanWarning& warning);

Json error_to_json(const Error& error);

/// Canonical text form used for every document the engine emits.
std::string dump(const Json& j);

} // namespace clic::codec
