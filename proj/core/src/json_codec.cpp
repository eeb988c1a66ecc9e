#include "json_codec.hpp"

#include <algorithm>
#include <cmath>

namespace clic::codec {

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorKind::parse,
                    "malformed document at line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + e.what(),
                    "");
    }
}

void fail(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::parse, (path.empty() ? std::string("/") : path) + ": " + message,
                path.empty() ? "/" : path);
}

void expect_object(const Json& v, const std::string& path) {
    if (!v.is_object()) fail(path, "expected an object");
}

const Json* find(const Json& obj, std::string_view key) {
    if (!obj.is_object()) return nullptr;
    auto it = obj.find(std::string(key));
    if (it == obj.end() || it->is_null()) return nullptr;
    return &*it;
}

const Json& require(const Json& obj, std::string_view key, const std::string& path) {
    expect_object(obj, path);
    const Json* v = find(obj, key);
    if (!v) fail(path + "/" + std::string(key), "missing required field \"" + std::string(key) + "\"");
    return *v;
}

double number(const Json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

std::int64_t integer(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::isfinite(d) && std::floor(d) == d && std::abs(d) < 9.0e15)
            return static_cast<std::int64_t>(d);
    }
    fail(path, "expected an integer");
}

std::string string(const Json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

bool boolean(const Json& v, const std::string& path) {
    if (!v.is_boolean()) fail(path, "expected a boolean");
    return v.get<bool>();
}

Quadrant quadrant(const Json& v, const std::string& path) {
    const std::string s = string(v, path);
    if (auto q = parse_quadrant(s)) return *q;
    fail(path, "unknown quadrant \"" + s + "\" (expected Q1..Q4)");
}

namespace {

DeploymentOption option_from(const Json& v, const std::string& path) {
    const std::string s = string(v, path);
    for (const auto& info : option_catalog())
        if (info.tag == s) return info.option;
    fail(path, "unknown deployment option \"" + s + "\"");
}

NfrLevel level(const Json& v, const std::string& path) {
    const std::string s = string(v, path);
    if (auto l = parse_nfr_level(s)) return *l;
    fail(path, "unknown grade \"" + s + "\" (expected L, M or H)");
}

std::optional<double> opt_number(const Json& obj, std::string_view key, const std::string& path) {
    if (const Json* v = find(obj, key)) return number(*v, path + "/" + std::string(key));
    return std::nullopt;
}

std::string opt_string(const Json& obj, std::string_view key, const std::string& path) {
    if (const Json* v = find(obj, key)) return string(*v, path + "/" + std::string(key));
    return {};
}

Json values_to_json(const QuadrantValues& v) {
    Json j = Json::object();
    for (Quadrant q : kAllQuadrants) j[std::string(to_string(q))] = v.at(q);
    return j;
}

QuadrantValues values_from_json(const Json& j, const std::string& path) {
    QuadrantValues v;
    for (Quadrant q : kAllQuadrants) {
        const std::string key(to_string(q));
        v.at(q) = number(require(j, key, path), path + "/" + key);
    }
    return v;
}

Json weights_to_json(const QuadrantWeights& w) {
    Json j = Json::object();
    for (Quadrant q : kAllQuadrants) j[std::string(to_string(q))] = w.at(q);
    return j;
}

QuadrantWeights weights_from_json(const Json& j, const std::string& path) {
    QuadrantWeights w;
    w.q1 = number(require(j, "Q1", path), path + "/Q1");
    w.q2 = number(require(j, "Q2", path), path + "/Q2");
    w.q3 = number(require(j, "Q3", path), path + "/Q3");
    w.q4 = number(require(j, "Q4", path), path + "/Q4");
    return w;
}

std::map<std::string, double> number_map(const Json& j, const std::string& path) {
    expect_object(j, path);
    std::map<std::string, double> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = number(it.value(), path + "/" + it.key());
    return out;
}

Json number_map_to_json(const std::map<std::string, double>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[k] = v;
    return j;
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string(j[i], path + "/" + std::to_string(i)));
    return out;
}

const Json& array_at(const Json& obj, std::string_view key, const std::string& path) {
    const Json& a = require(obj, key, path);
    if (!a.is_array()) fail(path + "/" + std::string(key), "expected an array");
    return a;
}

PlanWarning warning_from_json(const Json& j, const std::string& path) {
    return {string(require(j, "code", path), path + "/code"), opt_string(j, "workload_id", path),
            opt_string(j, "window_label", path), opt_string(j, "message", path)};
}

} // namespace

// ---- portfolio ----------------------------------------------------------------

Portfolio portfolio_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    Portfolio p;
    if (const Json* s = find(j, "schedule")) p.schedule = string_list(*s, path + "/schedule");
    if (const Json* c = find(j, "clic")) {
        const std::string cp = path + "/clic";
        expect_object(*c, cp);
        if (auto v = opt_number(*c, "isolation_threshold", cp)) p.clic.isolation_threshold = *v;
        if (auto v = opt_number(*c, "control_threshold", cp)) p.clic.control_threshold = *v;
    }
    const Json& ws = array_at(j, "workloads", path);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::string wp = path + "/workloads/" + std::to_string(i);
        const Json& wj = ws[i];
        expect_object(wj, wp);
        Workload w;
        w.id = string(require(wj, "id", wp), wp + "/id");
        w.name = opt_string(wj, "name", wp);
        w.industry = string(require(wj, "industry", wp), wp + "/industry");
        w.isolation_demand = number(require(wj, "isolation_demand", wp), wp + "/isolation_demand");
        w.control_demand = number(require(wj, "control_demand", wp), wp + "/control_demand");
        if (const Json* n = find(wj, "nfr")) w.nfr = nfr_from_json(*n, wp + "/nfr");
        if (const Json* q = find(wj, "pinned_quadrant")) w.pinned_quadrant = quadrant(*q, wp + "/pinned_quadrant");
        w.delta_w = opt_number(wj, "delta_w", wp);
        if (const Json* os = find(wj, "overrides")) {
            if (!os->is_array()) fail(wp + "/overrides", "expected an array");
            for (std::size_t k = 0; k < os->size(); ++k) {
                const std::string op = wp + "/overrides/" + std::to_string(k);
                const Json& oj = (*os)[k];
                DemandOverride o;
                o.window_label = string(require(oj, "window_label", op), op + "/window_label");
                o.isolation_demand = number(require(oj, "isolation_demand", op), op + "/isolation_demand");
                o.control_demand = number(require(oj, "control_demand", op), op + "/control_demand");
                if (const Json* q = find(oj, "pinned_quadrant"))
                    o.pinned_quadrant = quadrant(*q, op + "/pinned_quadrant");
                w.overrides.push_back(std::move(o));
            }
        }
        p.workloads.push_back(std::move(w));
    }
    return p;
}

Json to_json(const Portfolio& p) {
    Json j = Json::object();
    j["schedule"] = p.schedule;
    j["clic"] = {{"isolation_threshold", p.clic.isolation_threshold},
                 {"control_threshold", p.clic.control_threshold}};
    Json ws = Json::array();
    for (const auto& w : p.workloads) {
        Json wj = Json::object();
        wj["id"] = w.id;
        wj["name"] = w.name;
        wj["industry"] = w.industry;
        wj["isolation_demand"] = w.isolation_demand;
        wj["control_demand"] = w.control_demand;
        if (w.nfr) wj["nfr"] = to_json(*w.nfr);
        if (w.pinned_quadrant) wj["pinned_quadrant"] = std::string(to_string(*w.pinned_quadrant));
        if (w.delta_w) wj["delta_w"] = *w.delta_w;
        if (!w.overrides.empty()) {
            Json os = Json::array();
            for (const auto& o : w.overrides) {
                Json oj = {{"window_label", o.window_label},
                           {"isolation_demand", o.isolation_demand},
                           {"control_demand", o.control_demand}};
                if (o.pinned_quadrant) oj["pinned_quadrant"] = std::string(to_string(*o.pinned_quadrant));
                os.push_back(std::move(oj));
            }
            wj["overrides"] = std::move(os);
        }
        ws.push_back(std::move(wj));
    }
    j["workloads"] = std::move(ws);
    return j;
}

// ---- registries ---------------------------------------------------------------

IndustryRegistry registry_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    const Json& entries = require(j, "entries", path);
    IndustryRegistry r;
    for (const auto& [k, v] : number_map(entries, path + "/entries")) r.set(k, v);
    return r;
}

Json to_json(const IndustryRegistry& r) {
    return Json{{"entries", number_map_to_json(r.entries())}};
}

ProviderProfile provider_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    ProviderProfile p;
    p.k = number(require(j, "k", path), path + "/k");
    p.x_by_industry.clear();
    if (const Json* x = find(j, "x_by_industry"))
        for (const auto& [k, v] : number_map(*x, path + "/x_by_industry"))
            p.x_by_industry[canonical_industry(k)] = v;
    if (auto d = opt_number(j, "default_x", path)) p.default_x = *d;
    return p;
}

Json to_json(const ProviderProfile& p) {
    return Json{{"k", p.k}, {"x_by_industry", number_map_to_json(p.x_by_industry)}, {"default_x", p.default_x}};
}

// ---- calibration inputs -------------------------------------------------------

QuadrantCounts counts_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    QuadrantCounts c;
    c.w1 = integer(require(j, "w1", path), path + "/w1");
    c.w2 = integer(require(j, "w2", path), path + "/w2");
    c.w3 = integer(require(j, "w3", path), path + "/w3");
    c.w4 = integer(require(j, "w4", path), path + "/w4");
    return c;
}

Json to_json(const QuadrantCounts& c) {
    return Json{{"w1", c.w1}, {"w2", c.w2}, {"w3", c.w3}, {"w4", c.w4}};
}

DeploymentRecord record_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    DeploymentRecord r;
    r.industry = string(require(j, "industry", path), path + "/industry");
    if (const Json* c = find(j, "counts")) r.counts = counts_from_json(*c, path + "/counts");
    r.h = opt_number(j, "h", path);
    r.delta_w = opt_number(j, "delta_w", path);
    r.observed_effort = number(require(j, "observed_effort", path), path + "/observed_effort");
    r.x = number(require(j, "x", path), path + "/x");
    r.y = number(require(j, "y", path), path + "/y");
    r.custom_effort = opt_number(j, "custom_effort", path);
    return r;
}

EffortCurve curve_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    EffortCurve curve;
    curve.industry = opt_string(j, "industry", path);
    const Json& pts = array_at(j, "points", path);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string pp = path + "/points/" + std::to_string(i);
        const Json& pj = pts[i];
        CurvePoint pt;
        pt.workload_count = integer(require(pj, "workload_count", pp), pp + "/workload_count");
        if (const Json* n = find(pj, "normalized_effort")) {
            pt.normalized_effort = number(*n, pp + "/normalized_effort");
        } else if (const Json* o = find(pj, "observed_effort")) {
            const double observed = number(*o, pp + "/observed_effort");
            const double custom = opt_number(pj, "custom_effort", pp).value_or(0.0);
            const double x = opt_number(pj, "x", pp).value_or(1.0);
            try {
                pt.normalized_effort = normalize_effort(observed, custom, x);
            } catch (const Error& e) {
                fail(pp, e.what());
            }
        } else {
            fail(pp + "/normalized_effort", "missing required field \"normalized_effort\"");
        }
        curve.points.push_back(pt);
    }
    return curve;
}

NfrProfile nfr_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    NfrProfile n;
    n.availability = level(require(j, "availability", path), path + "/availability");
    n.business_continuity = level(require(j, "business_continuity", path), path + "/business_continuity");
    n.security = level(require(j, "security", path), path + "/security");
    n.compliance = level(require(j, "compliance", path), path + "/compliance");
    n.performance = level(require(j, "performance", path), path + "/performance");
    return n;
}

Json to_json(const NfrProfile& n) {
    return Json{{"availability", std::string(to_string(n.availability))},
                {"business_continuity", std::string(to_string(n.business_continuity))},
                {"security", std::string(to_string(n.security))},
                {"compliance", std::string(to_string(n.compliance))},
                {"performance", std::string(to_string(n.performance))}};
}

std::vector<NfrEntry> nfr_table_from_json(const Json& j) {
    expect_object(j, "");
    std::vector<NfrEntry> out;
    if (!find(j, "profiles")) {
        out.push_back({"", nfr_from_json(j, ""), std::nullopt});
        return out;
    }
    const Json& ps = array_at(j, "profiles", "");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string pp = "/profiles/" + std::to_string(i);
        NfrEntry e;
        e.industry = string(require(ps[i], "industry", pp), pp + "/industry");
        e.nfr = nfr_from_json(require(ps[i], "nfr", pp), pp + "/nfr");
        e.delta_w = opt_number(ps[i], "delta_w", pp);
        out.push_back(std::move(e));
    }
    return out;
}

Move move_from_json(const Json& j, const std::string& path) {
    expect_object(j, path);
    Move m;
    m.workload_id = string(require(j, "workload_id", path), path + "/workload_id");
    m.window_label = string(require(j, "window_label", path), path + "/window_label");
    m.target_quadrant = quadrant(require(j, "target_quadrant", path), path + "/target_quadrant");
    return m;
}

std::vector<Move> moves_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of moves");
    std::vector<Move> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(move_from_json(j[i], path + "/" + std::to_string(i)));
    return out;
}

EffortConventions conventions_from_json(const Json& j, const std::string& path, EffortConventions base) {
    expect_object(j, path);
    if (const Json* b = find(j, "h_basis")) {
        const std::string s = string(*b, path + "/h_basis");
        if (s == "presented") base.h_basis = HBasis::presented;
        else if (s == "exact") base.h_basis = HBasis::exact;
        else fail(path + "/h_basis", "expected \"presented\" or \"exact\"");
    }
    if (const Json* b = find(j, "variance_basis")) {
        const std::string s = string(*b, path + "/variance_basis");
        if (s == "predicted") base.variance_basis = VarianceBasis::predicted;
        else if (s == "observed") base.variance_basis = VarianceBasis::observed;
        else fail(path + "/variance_basis", "expected \"predicted\" or \"observed\"");
    }
    return base;
}

// ---- reports ------------------------------------------------------------------

Json to_json(const PlanWarning& w) {
    return Json{{"code", w.code}, {"workload_id", w.workload_id}, {"window_label", w.window_label},
                {"message", w.message}};
}

Json to_json(const EvaluationReport& r) {
    Json j = Json::object();
    j["portfolio_digest"] = r.portfolio_digest;
    j["schedule"] = r.schedule;

    Json groups = Json::array();
    for (const auto& g : r.groups) {
        Json windows = Json::array();
        for (const auto& w : g.windows)
            windows.push_back({{"label", w.label},
                               {"counts", to_json(w.counts)},
                               {"h", w.h},
                               {"h_presented", w.h_presented},
                               {"terms", values_to_json(w.terms)},
                               {"relative_cost", w.relative_cost},
                               {"effort_pm", w.effort_pm}});
        groups.push_back({{"industry", g.industry},
                          {"delta_w", g.delta_w},
                          {"x", g.x},
                          {"workload_ids", g.workload_ids},
                          {"windows", std::move(windows)},
                          {"peak_window", g.peak_window},
                          {"peak_effort_pm", g.peak_effort_pm}});
    }
    j["groups"] = std::move(groups);

    Json placements = Json::array();
    for (const auto& p : r.placements) {
        Json windows = Json::array();
        for (const auto& w : p.windows) {
            Json options = Json::array();
            for (auto o : w.options) options.push_back(std::string(to_string(o)));
            windows.push_back({{"label", w.label},
                               {"quadrant", std::string(to_string(w.quadrant))},
                               {"derived_quadrant", std::string(to_string(w.derived_quadrant))},
                               {"pinned", w.pinned},
                               {"options", std::move(options)}});
        }
        placements.push_back({{"workload_id", p.workload_id},
                              {"name", p.name},
                              {"industry", p.industry},
                              {"windows", std::move(windows)}});
    }
    j["placements"] = std::move(placements);

    Json totals = Json::array();
    for (const auto& t : r.totals)
        totals.push_back({{"label", t.label},
                          {"counts", to_json(t.counts)},
                          {"relative_cost", t.relative_cost},
                          {"effort_pm", t.effort_pm}});
    j["totals"] = std::move(totals);
    j["peak_window"] = r.peak_window;
    j["peak_effort_pm"] = r.peak_effort_pm;
    j["provider"] = {{"k", r.provider.k}, {"y", r.provider.y}, {"x_by_group", number_map_to_json(r.provider.x_by_group)}};
    if (r.variance)
        j["variance"] = {{"observed_effort_pm", r.variance->observed_effort_pm},
                         {"predicted_effort_pm", r.variance->predicted_effort_pm},
                         {"variance_pct", r.variance->variance_pct},
                         {"basis", std::string(to_string(r.variance->basis))}};
    Json warnings = Json::array();
    for (const auto& w : r.warnings) warnings.push_back(to_json(w));
    j["warnings"] = std::move(warnings);

    const auto& c = r.constants;
    j["constants"] = {{"quadrant_weights", weights_to_json(c.weights)},
                      {"term_multipliers", values_to_json(c.multipliers)},
                      {"term_asymptotes", values_to_json(c.asymptotes)},
                      {"delta_w", number_map_to_json(c.delta_w)},
                      {"h_digits", c.h_digits},
                      {"presented_h_digits", c.presented_h_digits},
                      {"effort_digits", c.effort_digits},
                      {"effort_h_basis", std::string(to_string(c.effort_h_basis))},
                      {"variance_basis", std::string(to_string(c.variance_basis))},
                      {"rounding", c.rounding}};
    return j;
}

EvaluationReport report_from_json(const Json& j) {
    expect_object(j, "");
    EvaluationReport r;
    r.portfolio_digest = string(require(j, "portfolio_digest", ""), "/portfolio_digest");
    r.schedule = string_list(require(j, "schedule", ""), "/schedule");

    const Json& groups = array_at(j, "groups", "");
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const std::string gp = "/groups/" + std::to_string(i);
        const Json& gj = groups[i];
        ReportGroup g;
        g.industry = string(require(gj, "industry", gp), gp + "/industry");
        g.delta_w = number(require(gj, "delta_w", gp), gp + "/delta_w");
        g.x = number(require(gj, "x", gp), gp + "/x");
        g.workload_ids = string_list(require(gj, "workload_ids", gp), gp + "/workload_ids");
        const Json& ws = array_at(gj, "windows", gp);
        for (std::size_t t = 0; t < ws.size(); ++t) {
            const std::string wp = gp + "/windows/" + std::to_string(t);
            const Json& wj = ws[t];
            ReportWindow w;
            w.label = string(require(wj, "label", wp), wp + "/label");
            w.counts = counts_from_json(require(wj, "counts", wp), wp + "/counts");
            w.h = number(require(wj, "h", wp), wp + "/h");
            w.h_presented = number(require(wj, "h_presented", wp), wp + "/h_presented");
            w.terms = values_from_json(require(wj, "terms", wp), wp + "/terms");
            w.relative_cost = number(require(wj, "relative_cost", wp), wp + "/relative_cost");
            w.effort_pm = number(require(wj, "effort_pm", wp), wp + "/effort_pm");
            g.windows.push_back(std::move(w));
        }
        g.peak_window = string(require(gj, "peak_window", gp), gp + "/peak_window");
        g.peak_effort_pm = number(require(gj, "peak_effort_pm", gp), gp + "/peak_effort_pm");
        r.groups.push_back(std::move(g));
    }

    const Json& placements = array_at(j, "placements", "");
    for (std::size_t i = 0; i < placements.size(); ++i) {
        const std::string pp = "/placements/" + std::to_string(i);
        const Json& pj = placements[i];
        ReportPlacement p;
        p.workload_id = string(require(pj, "workload_id", pp), pp + "/workload_id");
        p.name = opt_string(pj, "name", pp);
        p.industry = string(require(pj, "industry", pp), pp + "/industry");
        const Json& ws = array_at(pj, "windows", pp);
        for (std::size_t t = 0; t < ws.size(); ++t) {
            const std::string wp = pp + "/windows/" + std::to_string(t);
            const Json& wj = ws[t];
            ReportPlacementWindow w;
            w.label = string(require(wj, "label", wp), wp + "/label");
            w.quadrant = quadrant(require(wj, "quadrant", wp), wp + "/quadrant");
            w.derived_quadrant = quadrant(require(wj, "derived_quadrant", wp), wp + "/derived_quadrant");
            w.pinned = boolean(require(wj, "pinned", wp), wp + "/pinned");
            const Json& os = array_at(wj, "options", wp);
            for (std::size_t k = 0; k < os.size(); ++k)
                w.options.push_back(option_from(os[k], wp + "/options/" + std::to_string(k)));
            p.windows.push_back(std::move(w));
        }
        r.placements.push_back(std::move(p));
    }

    const Json& totals = array_at(j, "totals", "");
    for (std::size_t i = 0; i < totals.size(); ++i) {
        const std::string tp = "/totals/" + std::to_string(i);
        const Json& tj = totals[i];
        ReportTotal t;
        t.label = string(require(tj, "label", tp), tp + "/label");
        t.counts = counts_from_json(require(tj, "counts", tp), tp + "/counts");
        t.relative_cost = number(require(tj, "relative_cost", tp), tp + "/relative_cost");
        t.effort_pm = number(require(tj, "effort_pm", tp), tp + "/effort_pm");
        r.totals.push_back(std::move(t));
    }
    r.peak_window = string(require(j, "peak_window", ""), "/peak_window");
    r.peak_effort_pm = number(require(j, "peak_effort_pm", ""), "/peak_effort_pm");

    const Json& pj = require(j, "provider", "");
    r.provider.k = number(require(pj, "k", "/provider"), "/provider/k");
    r.provider.y = number(require(pj, "y", "/provider"), "/provider/y");
    r.provider.x_by_group = number_map(require(pj, "x_by_group", "/provider"), "/provider/x_by_group");

    if (const Json* v = find(j, "variance")) {
        ReportVariance var;
        var.observed_effort_pm = number(require(*v, "observed_effort_pm", "/variance"), "/variance/observed_effort_pm");
        var.predicted_effort_pm = number(require(*v, "predicted_effort_pm", "/variance"), "/variance/predicted_effort_pm");
        var.variance_pct = number(require(*v, "variance_pct", "/variance"), "/variance/variance_pct");
        const std::string basis = string(require(*v, "basis", "/variance"), "/variance/basis");
        var.basis = basis == "observed" ? VarianceBasis::observed : VarianceBasis::predicted;
        r.variance = var;
    }

    const Json& warnings = array_at(j, "warnings", "");
    for (std::size_t i = 0; i < warnings.size(); ++i)
        r.warnings.push_back(warning_from_json(warnings[i], "/warnings/" + std::to_string(i)));

    const Json& cj = require(j, "constants", "");
    const std::string cp = "/constants";
    auto& c = r.constants;
    c.weights = weights_from_json(require(cj, "quadrant_weights", cp), cp + "/quadrant_weights");
    c.multipliers = values_from_json(require(cj, "term_multipliers", cp), cp + "/term_multipliers");
    c.asymptotes = values_from_json(require(cj, "term_asymptotes", cp), cp + "/term_asymptotes");
    c.delta_w = number_map(require(cj, "delta_w", cp), cp + "/delta_w");
    c.h_digits = static_cast<int>(integer(require(cj, "h_digits", cp), cp + "/h_digits"));
    c.presented_h_digits = static_cast<int>(integer(require(cj, "presented_h_digits", cp), cp + "/presented_h_digits"));
    c.effort_digits = static_cast<int>(integer(require(cj, "effort_digits", cp), cp + "/effort_digits"));
    c.effort_h_basis = string(require(cj, "effort_h_basis", cp), cp + "/effort_h_basis") == "exact"
                           ? HBasis::exact
                           : HBasis::presented;
    c.variance_basis = string(require(cj, "variance_basis", cp), cp + "/variance_basis") == "observed"
                           ? VarianceBasis::observed
                           : VarianceBasis::predicted;
    c.rounding = string(require(cj, "rounding", cp), cp + "/rounding");
    return r;
}

namespace {

Json state_to_json(const ScenarioState& s, const EffortConventions& conv) {
    const int hd = kInternalHDigits;
    Json groups = Json::array();
    for (const auto& g : s.groups) {
        Json windows = Json::array();
        for (const auto& w : g.windows)
            windows.push_back({{"label", w.label},
                               {"counts", to_json(w.counts)},
                               {"h", round_half_up(w.h, hd)},
                               {"h_presented", round_half_up(w.h, conv.presented_h_digits)},
                               {"effort_pm", round_half_up(w.effort_pm, conv.effort_digits)}});
        groups.push_back({{"industry", g.industry},
                          {"delta_w", g.delta_w},
                          {"x", g.x},
                          {"workload_ids", g.workload_ids},
                          {"windows", std::move(windows)},
                          {"peak_window", g.peak_window},
                          {"peak_effort_pm", round_half_up(g.peak_effort_pm, conv.effort_digits)}});
    }
    Json totals = Json::array();
    for (const auto& t : s.totals)
        totals.push_back({{"label", t.label},
                          {"counts", to_json(t.counts)},
                          {"relative_cost", t.relative_cost},
                          {"effort_pm", round_half_up(t.effort_pm, conv.effort_digits)}});
    Json placements = Json::array();
    if (!s.plan.windows.empty()) {
        for (std::size_t i = 0; i < s.plan.windows.front().placements.size(); ++i) {
            Json windows = Json::array();
            for (const auto& wp : s.plan.windows) {
                const auto& p = wp.placements[i];
                windows.push_back({{"label", wp.label},
                                   {"quadrant", std::string(to_string(p.quadrant))},
                                   {"pinned", p.pinned}});
            }
            placements.push_back({{"workload_id", s.plan.windows.front().placements[i].workload_id},
                                  {"windows", std::move(windows)}});
        }
    }
    return Json{{"groups", std::move(groups)},
                {"totals", std::move(totals)},
                {"placements", std::move(placements)},
                {"peak_window", s.peak_window},
                {"peak_effort_pm", round_half_up(s.peak_effort_pm, conv.effort_digits)}};
}

} // namespace

Json to_json(const WhatIfDelta& d, const EffortConventions& conv) {
    const int hd = kInternalHDigits;
    Json moves = Json::array();
    for (const auto& m : d.moves)
        moves.push_back({{"workload_id", m.move.workload_id},
                         {"window_label", m.move.window_label},
                         {"target_quadrant", std::string(to_string(m.move.target_quadrant))},
                         {"from_quadrant", std::string(to_string(m.from))},
                         {"crossed_clic", m.crossed_clic}});
    Json groups = Json::array();
    for (const auto& g : d.groups) {
        Json windows = Json::array();
        for (const auto& w : g.windows)
            windows.push_back({{"label", w.label},
                               {"h", round_half_up(w.h, hd)},
                               {"effort_pm", round_half_up(w.effort_pm, conv.effort_digits)}});
        groups.push_back({{"industry", g.industry},
                          {"windows", std::move(windows)},
                          {"peak_effort_pm", round_half_up(g.peak_effort_pm, conv.effort_digits)}});
    }
    Json totals = Json::array();
    for (const auto& t : d.totals)
        totals.push_back({{"label", t.label}, {"effort_pm", round_half_up(t.effort_pm, conv.effort_digits)}});
    Json warnings = Json::array();
    for (const auto& w : d.warnings) warnings.push_back(to_json(w));
    bool crossed = false;
    for (const auto& m : d.moves) crossed = crossed || m.crossed_clic;
    return Json{{"moves", std::move(moves)},
                {"crossed_clic", crossed},
                {"before", state_to_json(d.before, conv)},
                {"after", state_to_json(d.after, conv)},
                {"delta",
                 {{"groups", std::move(groups)},
                  {"totals", std::move(totals)},
                  {"peak_effort_pm", round_half_up(d.peak_effort_pm, conv.effort_digits)}}},
                {"warnings", std::move(warnings)},
                {"conventions",
                 {{"h_digits", hd},
                  {"presented_h_digits", conv.presented_h_digits},
                  {"effort_digits", conv.effort_digits},
                  {"effort_h_basis", std::string(to_string(conv.h_basis))},
                  {"rounding", "half_up"}}}};
}

Json to_json(const KCalibration& c) {
    return Json{{"k", c.cma}, {"count", c.count}, {"k_values", c.k_values}, {"cma_history", c.cma_history}};
}

Json error_to_json(const Error& e) {
    Json findings = Json::array();
    for (const auto& f : e.findings())
        findings.push_back({{"severity", std::string(to_string(f.severity))},
                            {"code", f.code},
                            {"path", f.path},
                            {"message", f.message}});
    return Json{{"error",
                 {{"kind", std::string(to_string(e.kind()))},
                  {"message", e.what()},
                  {"path", e.path()},
                  {"stage", e.stage()},
                  {"findings", std::move(findings)}}}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace clic::codec
