#pragma once

#include <optional>
#include <string>
#include <vector>

namespace plan_cli {

struct EngineFiles {
    std::string portfolio;
    std::string registry;
    std::string provider;
    double y = 1.0;
    std::string h_basis = "presented";
    std::string variance_basis = "predicted";
};

struct EvaluateArgs {
    EngineFiles files;
    std::optional<double> observed;
    std::string output;
    std::string format = "json";
};

struct WhatIfArgs {
    EngineFiles files;
    std::vector<std::string> moves;
    std::string output;
};

struct CalibrateKArgs {
    std::string records;
    std::string registry;
};

struct CalibrateDeltaArgs {
    std::string curve;
    double tau = 0.05;
    int min_tail = 2;
};

struct QuotientArgs {
    std::string nfr;
};

struct ServeArgs {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string ui_dir;
    std::string registry;
    std::string provider;
    bool persist = false;
};

int run_evaluate(const EvaluateArgs& args);
int run_whatif(const WhatIfArgs& args);
int run_calibrate_k(const CalibrateKArgs& args);
int run_calibrate_delta(const CalibrateDeltaArgs& args);
int run_quotient(const QuotientArgs& args);
int run_serve(const ServeArgs& args);

} // namespace plan_cli
