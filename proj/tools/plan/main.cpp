// plan: hybrid-cloud deployment planning from the command line.

#include "commands.hpp"

#include "CLI11.hpp"

namespace {

void add_engine_options(CLI::App* cmd, plan_cli::EngineFiles& files) {
    cmd->add_option("-f,--file", files.portfolio, "Portfolio document")->required()->check(CLI::ExistingFile);
    cmd->add_option("--registry", files.registry, "Industry registry (delta_w) document")->check(CLI::ExistingFile);
    cmd->add_option("--provider", files.provider, "Provider profile (K, x) document")->check(CLI::ExistingFile);
    cmd->add_option("--y", files.y, "Custom work complexity factor in (0,1]")->capture_default_str();
    cmd->add_option("--h-basis", files.h_basis, "H fed to the effort model: presented | exact")
        ->check(CLI::IsMember({"presented", "exact"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid-cloud deployment planner: CLIC partitioning, hybrid complexity and effort estimates"};
    app.require_subcommand(1);

    plan_cli::EvaluateArgs eval;
    auto* evaluate = app.add_subcommand("evaluate", "Partition a portfolio and estimate its effort");
    add_engine_options(evaluate, eval.files);
    evaluate->add_option("--observed", eval.observed, "Observed effort in person-months");
    evaluate->add_option("-o,--output", eval.output, "Write the report here instead of stdout");
    evaluate->add_option("--format", eval.format, "Report format: json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    evaluate->add_option("--variance-basis", eval.files.variance_basis, "predicted | observed")
        ->check(CLI::IsMember({"predicted", "observed"}))
        ->capture_default_str();

    plan_cli::WhatIfArgs whatif_args;
    auto* whatif = app.add_subcommand("whatif", "Re-evaluate a portfolio after quadrant moves");
    add_engine_options(whatif, whatif_args.files);
    whatif->add_option("--move", whatif_args.moves, "<id>:<quadrant>[@<window>], repeatable")->required();
    whatif->add_option("-o,--output", whatif_args.output, "Write the delta here instead of stdout");

    auto* calibrate = app.add_subcommand("calibrate", "Calibrate model constants from history");
    calibrate->require_subcommand(1);

    plan_cli::CalibrateKArgs k_args;
    auto* calibrate_k = calibrate->add_subcommand("k", "Cumulative moving average of K over deployment records");
    calibrate_k->add_option("-f,--file", k_args.records, "Deployment records document")
        ->required()
        ->check(CLI::ExistingFile);
    calibrate_k->add_option("--registry", k_args.registry, "Industry registry for records given by counts")
        ->check(CLI::ExistingFile);

    plan_cli::CalibrateDeltaArgs delta_args;
    auto* calibrate_delta = calibrate->add_subcommand("delta", "CLIC constant from an effort curve plateau");
    calibrate_delta->add_option("-f,--file", delta_args.curve, "Effort curve document")
        ->required()
        ->check(CLI::ExistingFile);
    calibrate_delta->add_option("--tau", delta_args.tau, "Relative increase tolerance")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    calibrate_delta->add_option("--min-tail", delta_args.min_tail, "Consecutive flat gaps required")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    plan_cli::QuotientArgs q_args;
    auto* quotient = app.add_subcommand("quotient", "NFR complexity quotients and delta_w consistency");
    quotient->add_option("-f,--file", q_args.nfr, "NFR profile or profile table")->required()->check(CLI::ExistingFile);

    plan_cli::ServeArgs serve_args;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--host", serve_args.host)->capture_default_str();
    serve->add_option("--port", serve_args.port)->capture_default_str();
    serve->add_option("--ui-dir", serve_args.ui_dir, "Static UI assets served at /")->check(CLI::ExistingDirectory);
    serve->add_option("--registry", serve_args.registry, "Initial industry registry")->check(CLI::ExistingFile);
    serve->add_option("--provider", serve_args.provider, "Initial provider profile")->check(CLI::ExistingFile);
    serve->add_flag("--persist", serve_args.persist, "Write registry updates back to their files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*evaluate) return plan_cli::run_evaluate(eval);
    if (*whatif) return plan_cli::run_whatif(whatif_args);
    if (*calibrate_k) return plan_cli::run_calibrate_k(k_args);
    if (*calibrate_delta) return plan_cli::run_calibrate_delta(delta_args);
    if (*quotient) return plan_cli::run_quotient(q_args);
    if (*serve) return plan_cli::run_serve(serve_args);
    return 5;
}
