#include "exdom/errors.hpp"

namespace exdom {

const char* to_string(ErrorCategory cat) {
    switch (cat) {
    case ErrorCategory::config: return "Config";
    case ErrorCategory::io: return "Io";
    case ErrorCategory::cfl_violation: return "CflViolation";
    case ErrorCategory::non_finite_state: return "NonFiniteState";
    case ErrorCategory::front_lost: return "FrontLost";
    case ErrorCategory::front_at_domain_end: return "FrontAtDomainEnd";
    case ErrorCategory::singular_coefficient: return "SingularCoefficient";
    case ErrorCategory::domain_too_small: return "DomainTooSmall";
    case ErrorCategory::radius_collapse: return "RadiusCollapse";
    case ErrorCategory::invalid_initial_data: return "InvalidInitialData";
    }
    return "Unknown";
}

} // namespace exdom
