#pragma once

#include <stdexcept>
#include <string>

namespace exdom {

enum class ErrorCategory {
    config,
    io,
    cfl_violation,
    non_finite_state,
    front_lost,
    front_at_domain_end,
    singular_coefficient,
    domain_too_small,
    radius_collapse,
    invalid_initial_data,
};

const char* to_string(ErrorCategory cat);

/// Error thrown by solvers and loaders; carries a machine-readable category.
class SolverError : public std::runtime_error {
public:
    SolverError(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}

    ErrorCategory category() const noexcept { return cat_; }

private:
    ErrorCategory cat_;
};

[[noreturn]] inline void fail(ErrorCategory cat, const std::string& msg) {
    throw SolverError(cat, msg);
}

} // namespace exdom
