#ifndef CFREE_ERROR_HPP
#define CFREE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfree {

enum class ErrorKind {
    invalid_input,
    invalid_argument,
    io_error,
    budget_exceeded,
    not_bipartite,
    not_linear,
    not_three_uniform,
    uniformity_mismatch,
    density_too_high,
    infeasible,
    state_space_too_large,
    min_degree,
    not_connected,
    config_invalid,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; the
// kind lets callers (and the CLI exit code) distinguish them.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::io_error: return "io-error";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::not_bipartite: return "not-bipartite";
    case ErrorKind::not_linear: return "not-linear";
    case ErrorKind::not_three_uniform: return "not-3-uniform";
    case ErrorKind::uniformity_mismatch: return "uniformity-mismatch";
    case ErrorKind::density_too_high: return "density-too-high";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::state_space_too_large: return "state-space-too-large";
    case ErrorKind::min_degree: return "min-degree";
    case ErrorKind::not_connected: return "not-connected";
    case ErrorKind::config_invalid: return "config-invalid";
    }
    return "unknown";
}

} // namespace cfree

#endif // CFREE_ERROR_HPP
