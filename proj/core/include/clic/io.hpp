#pragma once

// JSON documents: portfolios, registries, provider profiles, calibration
// inputs and the reports the CLI and the service emit. Errors are
// ErrorKind::parse with a JSON-pointer path (and line/column for syntax).

#include "clic/calibrate.hpp"
#include "clic/model.hpp"
#include "clic/pipeline.hpp"
#include "clic/scenario.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clic {

Portfolio load_portfolio(std::string_view document);
std::string save_portfolio(const Portfolio& portfolio);

IndustryRegistry load_registry(std::string_view document);
std::string save_registry(const IndustryRegistry& registry);

ProviderProfile load_provider(std::string_view document);
std::string save_provider(const ProviderProfile& provider);

std::vector<DeploymentRecord> load_records(std::string_view document);

/// Points carry either `normalized_effort` or raw `observed_effort` (with
/// optional `custom_effort` and `x`) which is normalized on load.
EffortCurve load_curve(std::string_view document);

struct NfrEntry {
    std::string industry;
    NfrProfile nfr;
    std::optional<double> delta_w;
};

/// Accepts {"profiles": [...]} or a single bare NFR profile object.
std::vector<NfrEntry> load_nfr_table(std::string_view document);

std::vector<Move> load_moves(std::string_view document);

enum class ReportFormat { json, text };

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

std::string save_report(const EvaluationReport& report, ReportFormat format = ReportFormat::json);
EvaluationReport load_report(std::string_view document);

std::string save_what_if(const WhatIfDelta& delta, const EffortConventions& conventions = {});
std::string save_k_calibration(const KCalibration& calibration);
std::string save_delta_estimate(const EffortCurve& curve, const PlateauParams& params, double delta_w);
std::string save_quotients(const std::vector<NfrEntry>& entries);

/// Whole file as a string; ErrorKind::io when unreadable.
std::string read_file(const std::filesystem::path& path);
/// Writes via a temporary sibling and rename so readers never see a torn file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace clic
