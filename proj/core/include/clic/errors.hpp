#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clic {

enum class ErrorKind {
    parse,
    validation,
    range,
    domain,
    unknown_industry,
    no_plateau,
    not_calibratable,
    empty_dataset,
    reference,
    undefined_variance,
    conflict,
    io,
    internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit code used by the `plan` CLI for an error of this kind.
int exit_code(ErrorKind kind) noexcept;

/// HTTP status used by the service for an error of this kind.
int http_status(ErrorKind kind) noexcept;

enum class Severity { error, warning };

std::string_view to_string(Severity severity) noexcept;

/// A single validation observation. `path` is a JSON-pointer style location
/// such as "/workloads/2/isolation_demand".
struct Finding {
    Severity severity = Severity::error;
    std::string code;
    std::string path;
    std::string message;

    bool operator==(const Finding&) const = default;
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string path = {});
    Error(ErrorKind kind, const std::string& message, std::vector<Finding> findings);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& path() const noexcept { return path_; }
    const std::string& stage() const noexcept { return stage_; }
    const std::vector<Finding>& findings() const noexcept { return findings_; }

    /// Copy of this error tagged with the pipeline stage it escaped from.
    Error with_stage(std::string stage) const;

private:
    ErrorKind kind_;
    std::string path_;
    std::string stage_;
    std::vector<Finding> findings_;
};

/// Throws a validation (or unknown-industry) error when `findings` holds any
/// error-severity entry. Unknown-industry is reported only when it is the sole
/// class of error present.
void throw_if_errors(const std::vector<Finding>& findings, std::string_view what);

/// Runs `f`, tagging any escaping Error with `stage` unless it already
/// carries one.
template <class F>
decltype(auto) run_stage(std::string_view stage, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (!e.stage().empty()) throw;
        throw e.with_stage(std::string(stage));
    }
}

} // namespace clic
