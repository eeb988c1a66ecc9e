#include "clic/errors.hpp"

#include <algorithm>

namespace clic {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::range: return "range";
    case ErrorKind::domain: return "domain";
    case ErrorKind::unknown_industry: return "unknown_industry";
    case ErrorKind::no_plateau: return "no_plateau";
    case ErrorKind::not_calibratable: return "not_calibratable";
    case ErrorKind::empty_dataset: return "empty_dataset";
    case ErrorKind::reference: return "reference";
    case ErrorKind::undefined_variance: return "undefined_variance";
    case ErrorKind::conflict: return "conflict";
    case ErrorKind::io: return "io";
    case ErrorKind::internal: return "internal";
    }
    return "internal";
}

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::validation:
    case ErrorKind::range:
    case ErrorKind::domain:
    case ErrorKind::reference:
    case ErrorKind::not_calibratable:
    case ErrorKind::empty_dataset:
    case ErrorKind::undefined_variance:
        return 2;
    case ErrorKind::unknown_industry: return 3;
    case ErrorKind::no_plateau: return 4;
    case ErrorKind::conflict:
    case ErrorKind::io:
    case ErrorKind::internal:
        return 5;
    }
    return 5;
}

int http_status(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::conflict: return 409;
    case ErrorKind::io:
    case ErrorKind::internal:
        return 500;
    default: return 422;
    }
}

std::string_view to_string(Severity severity) noexcept {
    return severity == Severity::error ? "error" : "warning";
}

Error::Error(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

Error::Error(ErrorKind kind, const std::string& message, std::vector<Finding> findings)
    : std::runtime_error(message), kind_(kind), findings_(std::move(findings)) {
    if (!findings_.empty()) path_ = findings_.front().path;
}

Error Error::with_stage(std::string stage) const {
    Error copy = *this;
    copy.stage_ = std::move(stage);
    return copy;
}

void throw_if_errors(const std::vector<Finding>& findings, std::string_view what) {
    std::vector<Finding> errors;
    std::copy_if(findings.begin(), findings.end(), std::back_inserter(errors),
                 [](const Finding& f) { return f.severity == Severity::error; });
    if (errors.empty()) return;

    const bool only_unknown = std::all_of(errors.begin(), errors.end(), [](const Finding& f) {
        return f.code == "unknown_industry";
    });
    std::string message = std::string(what) + " is invalid: " + errors.front().path + ": " +
                          errors.front().message;
    if (errors.size() > 1) message += " (+" + std::to_string(errors.size() - 1) + " more)";
    throw Error(only_unknown ? ErrorKind::unknown_industry : ErrorKind::validation, message,
                std::move(errors));
}

} // namespace clic
