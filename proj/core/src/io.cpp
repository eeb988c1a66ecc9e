#include "clic/io.hpp"

#include "json_codec.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace clic {

using codec::Json;

Portfolio load_portfolio(std::string_view document) {
    return codec::portfolio_from_json(codec::parse_document(document));
}

std::string save_portfolio(const Portfolio& portfolio) { return codec::dump(codec::to_json(portfolio)); }

IndustryRegistry load_registry(std::string_view document) {
    return codec::registry_from_json(codec::parse_document(document));
}

std::string save_registry(const IndustryRegistry& registry) {
    return codec::dump(codec::to_json(registry));
}

ProviderProfile load_provider(std::string_view document) {
    return codec::provider_from_json(codec::parse_document(document));
}

std::string save_provider(const ProviderProfile& provider) {
    return codec::dump(codec::to_json(provider));
}

std::vector<DeploymentRecord> load_records(std::string_view document) {
    const Json j = codec::parse_document(document);
    const Json* list = &j;
    std::string base;
    if (j.is_object()) {
        list = &codec::require(j, "records", "");
        base = "/records";
    }
    if (!list->is_array()) codec::fail(base, "expected an array of records");
    std::vector<DeploymentRecord> out;
    for (std::size_t i = 0; i < list->size(); ++i)
        out.push_back(codec::record_from_json((*list)[i], base + "/" + std::to_string(i)));
    return out;
}

EffortCurve load_curve(std::string_view document) {
    return codec::curve_from_json(codec::parse_document(document));
}

std::vector<NfrEntry> load_nfr_table(std::string_view document) {
    return codec::nfr_table_from_json(codec::parse_document(document));
}

std::vector<Move> load_moves(std::string_view document) {
    const Json j = codec::parse_document(document);
    if (j.is_object()) return codec::moves_from_json(codec::require(j, "moves", ""), "/moves");
    return codec::moves_from_json(j, "");
}

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
    if (text == "json") return ReportFormat::json;
    if (text == "text" || text == "txt") return ReportFormat::text;
    return std::nullopt;
}

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string counts_text(const QuadrantCounts& c) {
    return "W1=" + std::to_string(c.w1) + " W2=" + std::to_string(c.w2) + " W3=" + std::to_string(c.w3) +
           " W4=" + std::to_string(c.w4);
}

std::string report_text(const EvaluationReport& r) {
    const auto& c = r.constants;
    std::ostringstream out;
    out << "Hybrid deployment estimate  (portfolio " << r.portfolio_digest << ")\n";
    out << "provider K=" << r.provider.k << "  y=" << r.provider.y << "\n\n";
    for (const auto& g : r.groups) {
        out << "[" << g.industry << "]  delta_w=" << g.delta_w << "  x=" << g.x << "  workloads="
            << g.workload_ids.size() << "\n";
        for (const auto& w : g.windows)
            out << "  " << w.label << ": " << counts_text(w.counts) << "  H=" << fixed(w.h_presented, c.presented_h_digits)
                << "  cost=" << w.relative_cost << "  E=" << fixed(w.effort_pm, c.effort_digits) << " PM\n";
        out << "  peak: " << g.peak_window << " " << fixed(g.peak_effort_pm, c.effort_digits) << " PM\n\n";
    }
    out << "Totals\n";
    for (const auto& t : r.totals)
        out << "  " << t.label << ": " << counts_text(t.counts) << "  cost=" << t.relative_cost
            << "  E=" << fixed(t.effort_pm, c.effort_digits) << " PM\n";
    out << "  peak: " << r.peak_window << " " << fixed(r.peak_effort_pm, c.effort_digits) << " PM\n";
    if (r.variance)
        out << "  observed " << fixed(r.variance->observed_effort_pm, c.effort_digits) << " PM, variance "
            << fixed(r.variance->variance_pct, 2) << "% of " << to_string(r.variance->basis) << "\n";
    out << "\nPlacements\n";
    for (const auto& p : r.placements) {
        out << "  " << p.workload_id << (p.name.empty() ? "" : " (" + p.name + ")") << "\n";
        for (const auto& w : p.windows) {
            out << "    " << w.label << ": " << to_string(w.quadrant) << (w.pinned ? " (pinned)" : "") << " ->";
            for (auto o : w.options) out << " " << to_string(o);
            out << "\n";
        }
    }
    if (!r.warnings.empty()) {
        out << "\nWarnings\n";
        for (const auto& w : r.warnings) out << "  [" << w.code << "] " << w.message << "\n";
    }
    return out.str();
}

} // namespace

std::string save_report(const EvaluationReport& report, ReportFormat format) {
    if (format == ReportFormat::text) return report_text(report);
    return codec::dump(codec::to_json(report));
}

EvaluationReport load_report(std::string_view document) {
    return codec::report_from_json(codec::parse_document(document));
}

std::string save_what_if(const WhatIfDelta& delta, const EffortConventions& conventions) {
    return codec::dump(codec::to_json(delta, conventions));
}

std::string save_k_calibration(const KCalibration& calibration) {
    return codec::dump(codec::to_json(calibration));
}

std::string save_delta_estimate(const EffortCurve& curve, const PlateauParams& params, double delta_w) {
    Json j = Json::object();
    if (!curve.industry.empty()) j["industry"] = curve.industry;
    j["delta_w"] = delta_w;
    j["tau"] = params.tau;
    j["min_tail"] = params.min_tail;
    j["points"] = curve.points.size();
    return codec::dump(j);
}

std::string save_quotients(const std::vector<NfrEntry>& entries) {
    Json rows = Json::array();
    std::vector<QuotientEntry> table;
    for (const auto& e : entries) {
        const int q = complexity_quotient(e.nfr);
        Json row = {{"industry", e.industry}, {"nfr", codec::to_json(e.nfr)}, {"complexity_quotient", q}};
        if (e.delta_w) {
            row["delta_w"] = *e.delta_w;
            table.push_back({e.industry, q, *e.delta_w});
        }
        rows.push_back(std::move(row));
    }
    Json j = {{"quotients", std::move(rows)}};
    if (table.size() >= 2) {
        Json violations = Json::array();
        for (const auto& v : check_quotient_delta_consistency(table))
            violations.push_back({{"higher", v.higher.industry},
                                  {"higher_quotient", v.higher.quotient},
                                  {"higher_delta_w", v.higher.delta_w},
                                  {"lower", v.lower.industry},
                                  {"lower_quotient", v.lower.quotient},
                                  {"lower_delta_w", v.lower.delta_w},
                                  {"message", v.message}});
        j["consistent"] = violations.empty();
        j["violations"] = std::move(violations);
    }
    return codec::dump(j);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::io, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error(ErrorKind::io, "short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::io, "cannot replace " + path.string());
    }
}

} // namespace clic
