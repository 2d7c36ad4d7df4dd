#include "exdom/model.hpp"

#include <cmath>
#include <string>

#include "exdom/errors.hpp"

namespace exdom {

namespace {

// H(x) = 1 for x >= 0, else 0.
inline double heaviside(double x) { return x >= 0.0 ? 1.0 : 0.0; }

inline void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0))
        fail(ErrorCategory::config, std::string(name) + " must be >= 0");
}

inline void guard_singularity(double alpha, const ModelParams& p) {
    if (alpha >= 1.0 - p.eps_sing)
        fail(ErrorCategory::singular_coefficient,
             "alpha = " + std::to_string(alpha) + " reaches the (1-alpha)^-2 singularity");
}

// numerator / (1-alpha)^2 gated at alpha_min. Shared by the stress and the
// traction so that alpha * traction(natural) == sigma_stress bit-for-bit.
inline double stress_kernel(double alpha, double numerator, const ModelParams& p) {
    const double d = 1.0 - alpha;
    return numerator / (d * d) * heaviside(alpha - p.alpha_min);
}

} // namespace

void ModelParams::validate() const {
    require_nonneg(s1, "s1");
    require_nonneg(s2, "s2");
    require_nonneg(s3, "s3");
    require_nonneg(s4, "s4");
    require_nonneg(k, "k");
    require_nonneg(mu, "mu");
    require_nonneg(Q, "Q");
    require_nonneg(Q1hat, "Q1hat");
    if (!(alpha_min > 0.0 && alpha_min < 1.0))
        fail(ErrorCategory::config, "alpha_min must lie in (0, 1)");
    if (!(alpha_star > 0.0 && alpha_star < 1.0))
        fail(ErrorCategory::config, "alpha_star must lie in (0, 1)");
    if (!(ell0 > 0.0))
        fail(ErrorCategory::config, "ell0 must be > 0");
    if (!(eps_sing > 0.0))
        fail(ErrorCategory::config, "eps_sing must be > 0");
}

void Bounds::validate() const {
    if (!(0.0 < m_alpha && m_alpha <= M_alpha && M_alpha < 1.0))
        fail(ErrorCategory::config, "bounds must satisfy 0 < m_alpha <= M_alpha < 1");
}

double f_growth(double alpha, double C, const ModelParams& p) {
    return (1.0 + p.s1) * (1.0 - alpha) * C / (1.0 + p.s1 * C)
         - (p.s2 + p.s3 * C) / (1.0 + p.s4 * C);
}

double sigma_stress(double alpha, const ModelParams& p) {
    guard_singularity(alpha, p);
    return alpha * stress_kernel(alpha, alpha - p.alpha_star, p);
}

double boundary_traction(double alpha_at_front, const ModelParams& p) {
    guard_singularity(alpha_at_front, p);
    const double numerator = p.traction_mode == TractionMode::literal
                                 ? alpha_at_front - p.alpha_min
                                 : alpha_at_front - p.alpha_star;
    return stress_kernel(alpha_at_front, numerator, p);
}

double oxygen_sink(double alpha, double C, const ModelParams& p) {
    return -p.Q * alpha * C / (1.0 + p.Q1hat * C);
}

} // namespace exdom
