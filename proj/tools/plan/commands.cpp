#include "commands.hpp"

#include "clic/http_server.hpp"
#include "clic/io.hpp"
#include "clic/pipeline.hpp"
#include "clic/registry_store.hpp"
#include "clic/scenario.hpp"
#include "clic/service.hpp"

#include <csignal>
#include <iostream>

namespace plan_cli {

using namespace clic;

namespace {

int report_error(const Error& e) {
    std::cerr << "error[" << to_string(e.kind()) << "]";
    if (!e.stage().empty()) std::cerr << " (" << e.stage() << ")";
    std::cerr << ": " << e.what() << "\n";
    for (const auto& f : e.findings())
        std::cerr << "  " << to_string(f.severity) << " " << f.path << ": " << f.message << "\n";
    return exit_code(e.kind());
}

template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        return report_error(Error(ErrorKind::internal, e.what()));
    }
}

void emit(const std::string& output, const std::string& content) {
    if (output.empty() || output == "-") std::cout << content;
    else write_file_atomic(output, content);
}

struct Engine {
    Portfolio portfolio;
    IndustryRegistry registry = IndustryRegistry::defaults();
    ProviderProfile provider = ProviderProfile::defaults();
    EvaluationSettings settings;
};

Engine load_engine(const EngineFiles& files) {
    Engine e;
    e.portfolio = load_portfolio(read_file(files.portfolio));
    if (!files.registry.empty()) e.registry = load_registry(read_file(files.registry));
    if (!files.provider.empty()) e.provider = load_provider(read_file(files.provider));
    e.settings.engagement.y = files.y;
    e.settings.conventions.h_basis = files.h_basis == "exact" ? HBasis::exact : HBasis::presented;
    e.settings.conventions.variance_basis =
        files.variance_basis == "observed" ? VarianceBasis::observed : VarianceBasis::predicted;
    return e;
}

// <id>:<quadrant>[@<window>]; without a window the move applies to every window.
std::vector<Move> parse_move(const std::string& spec, const Portfolio& portfolio) {
    std::string head = spec;
    std::optional<std::string> window;
    if (auto at = spec.rfind('@'); at != std::string::npos) {
        head = spec.substr(0, at);
        window = spec.substr(at + 1);
    }
    const auto colon = head.rfind(':');
    if (colon == std::string::npos || colon == 0)
        throw Error(ErrorKind::parse, "move \"" + spec + "\" must look like <id>:<quadrant>[@<window>]");
    const auto quadrant = parse_quadrant(head.substr(colon + 1));
    if (!quadrant) throw Error(ErrorKind::parse, "move \"" + spec + "\" names an unknown quadrant");

    std::vector<Move> out;
    const std::string id = head.substr(0, colon);
    if (window) out.push_back({id, *window, *quadrant});
    else
        for (const auto& label : portfolio.schedule) out.push_back({id, label, *quadrant});
    return out;
}

HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

} // namespace

int run_evaluate(const EvaluateArgs& args) {
    return guarded([&] {
        const auto format = parse_report_format(args.format);
        if (!format) throw Error(ErrorKind::parse, "unknown report format \"" + args.format + "\"");
        const Engine e = load_engine(args.files);
        EstimateOptions options;
        options.settings = e.settings;
        options.observed_effort = args.observed;
        const EvaluationReport report = estimate_pipeline(e.portfolio, e.registry, e.provider, options);
        emit(args.output, save_report(report, *format));
        return 0;
    });
}

int run_whatif(const WhatIfArgs& args) {
    return guarded([&] {
        const Engine e = load_engine(args.files);
        std::vector<Move> moves;
        for (const auto& spec : args.moves)
            for (auto& m : parse_move(spec, e.portfolio)) moves.push_back(std::move(m));
        const WhatIfDelta delta = what_if(e.portfolio, e.registry, e.provider, e.settings, moves);
        emit(args.output, save_what_if(delta, e.settings.conventions));
        return 0;
    });
}

int run_calibrate_k(const CalibrateKArgs& args) {
    return guarded([&] {
        const auto records = load_records(read_file(args.records));
        const IndustryRegistry registry =
            args.registry.empty() ? IndustryRegistry::defaults() : load_registry(read_file(args.registry));
        std::cout << save_k_calibration(aggregate_k(records, registry));
        return 0;
    });
}

int run_calibrate_delta(const CalibrateDeltaArgs& args) {
    return guarded([&] {
        if (args.min_tail < 1) throw Error(ErrorKind::domain, "--min-tail must be at least 1");
        const EffortCurve curve = load_curve(read_file(args.curve));
        const PlateauParams params{args.tau, static_cast<std::size_t>(args.min_tail)};
        std::cout << save_delta_estimate(curve, params, estimate_delta_w(curve, params));
        return 0;
    });
}

int run_quotient(const QuotientArgs& args) {
    return guarded([&] {
        std::cout << save_quotients(load_nfr_table(read_file(args.nfr)));
        return 0;
    });
}

int run_serve(const ServeArgs& args) {
    return guarded([&] {
        RegistryStore::Paths paths;
        IndustryRegistry registry = IndustryRegistry::defaults();
        ProviderProfile provider = ProviderProfile::defaults();
        if (!args.registry.empty()) {
            registry = load_registry(read_file(args.registry));
            if (args.persist) paths.delta = args.registry;
        }
        if (!args.provider.empty()) {
            provider = load_provider(read_file(args.provider));
            if (args.persist) paths.provider = args.provider;
        }
        RegistryStore store(std::move(registry), std::move(provider), paths);
        Service service(store);

        ServerConfig config;
        config.host = args.host;
        config.port = args.port;
        if (!args.ui_dir.empty()) config.ui_dir = args.ui_dir;
        HttpServer server(service, config);
        const int port = server.bind();
        std::cerr << "plan: serving on http://" << args.host << ":" << port << "\n";

        g_server = &server;
        std::signal(SIGINT, on_signal);
        std::signal(SIGTERM, on_signal);
        server.run();
        g_server = nullptr;
        return 0;
    });
}

} // namespace plan_cli
