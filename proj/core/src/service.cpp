#include "clic/service.hpp"

#include "clic/io.hpp"
#include "clic/pipeline.hpp"
#include "json_codec.hpp"

namespace clic {

using codec::Json;

namespace {

struct EngineInputs {
    Portfolio portfolio;
    IndustryRegistry registry;
    ProviderProfile provider;
    EstimateOptions options;
};

EngineInputs read_inputs(const Json& body, const RegistryStore& store) {
    codec::expect_object(body, "");
    EngineInputs in;
    if (const Json* p = codec::find(body, "portfolio"))
        in.portfolio = codec::portfolio_from_json(*p, "/portfolio");
    else
        in.portfolio = codec::portfolio_from_json(body, "");

    if (const Json* r = codec::find(body, "registry")) in.registry = codec::registry_from_json(*r, "/registry");
    else in.registry = *store.delta().value;

    if (const Json* p = codec::find(body, "provider")) in.provider = codec::provider_from_json(*p, "/provider");
    else in.provider = *store.provider().value;

    if (const Json* y = codec::find(body, "y")) in.options.settings.engagement.y = codec::number(*y, "/y");
    if (const Json* o = codec::find(body, "observed_effort"))
        in.options.observed_effort = codec::number(*o, "/observed_effort");
    if (const Json* c = codec::find(body, "conventions"))
        in.options.settings.conventions = codec::conventions_from_json(*c, "/conventions");
    return in;
}

HttpResponse json_response(int status, const Json& j) { return {status, codec::dump(j)}; }

HttpResponse error_response(const Error& e) { return json_response(http_status(e.kind()), codec::error_to_json(e)); }

std::optional<std::uint64_t> revision_of(const Json& body) {
    if (const Json* r = codec::find(body, "revision"))
        return static_cast<std::uint64_t>(codec::integer(*r, "/revision"));
    return std::nullopt;
}

Json delta_body(const Snapshot<IndustryRegistry>& s) {
    Json j = codec::to_json(*s.value);
    j["revision"] = s.revision;
    return j;
}

Json provider_body(const Snapshot<ProviderProfile>& s) {
    Json j = codec::to_json(*s.value);
    j["revision"] = s.revision;
    return j;
}

} // namespace

HttpResponse Service::handle(const HttpRequest& request) const {
    const auto& method = request.method;
    const auto& path = request.path;
    auto not_allowed = [&] {
        return json_response(405, Json{{"error", {{"kind", "method_not_allowed"},
                                                  {"message", method + " not supported on " + path}}}});
    };

    try {
        if (path == "/api/v1/health") {
            if (method != "GET") return not_allowed();
            return json_response(200, Json{{"status", "ok"}});
        }
        if (path == "/api/v1/catalog/options") {
            if (method != "GET") return not_allowed();
            Json options = Json::array();
            for (const auto& info : option_catalog())
                options.push_back({{"tag", std::string(info.tag)},
                                   {"quadrant", std::string(to_string(info.quadrant))},
                                   {"description", std::string(info.description)}});
            return json_response(200, Json{{"options", std::move(options)}});
        }
        if (path == "/api/v1/evaluate") {
            if (method != "POST") return not_allowed();
            const EngineInputs in = read_inputs(codec::parse_document(request.body), store_);
            const EvaluationReport report = estimate_pipeline(in.portfolio, in.registry, in.provider, in.options);
            return {200, save_report(report)};
        }
        if (path == "/api/v1/whatif") {
            if (method != "POST") return not_allowed();
            const Json body = codec::parse_document(request.body);
            const EngineInputs in = read_inputs(body, store_);
            const auto moves = codec::moves_from_json(codec::require(body, "moves", ""), "/moves");
            const WhatIfDelta delta = what_if(in.portfolio, in.registry, in.provider, in.options.settings, moves);
            return {200, save_what_if(delta, in.options.settings.conventions)};
        }
        if (path == "/api/v1/registries/delta") {
            if (method == "GET") return json_response(200, delta_body(store_.delta()));
            if (method != "PUT") return not_allowed();
            const Json body = codec::parse_document(request.body);
            store_.put_delta(codec::registry_from_json(body), revision_of(body));
            return json_response(200, delta_body(store_.delta()));
        }
        if (path == "/api/v1/registries/provider") {
            if (method == "GET") return json_response(200, provider_body(store_.provider()));
            if (method != "PUT") return not_allowed();
            const Json body = codec::parse_document(request.body);
            store_.put_provider(codec::provider_from_json(body), revision_of(body));
            return json_response(200, provider_body(store_.provider()));
        }
        return json_response(404, Json{{"error", {{"kind", "not_found"}, {"message", "no resource at " + path}}}});
    } catch (const Error& e) {
        return error_response(e);
    } catch (const std::exception& e) {
        return error_response(Error(ErrorKind::internal, e.what()));
    }
}

} // namespace clic
