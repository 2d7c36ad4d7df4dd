#pragma once

namespace exdom {

/// Which numerator the free-boundary traction uses. `literal` is the boundary
/// condition as printed, with (alpha - alpha_min); `natural` uses
/// (alpha - alpha_star) so the traction cancels the interior stress in the
/// weak form. The two coincide when alpha_star == alpha_min.
enum class TractionMode { literal, natural };

/// Dimensionless constants of the two-phase growth model. Defaults are the
/// reference set s1 = s4 = 10, s2 = s3 = 0.5, k = mu = 1, Q = 0.5, Q1hat = 0,
/// ell0 = 1. alpha_star and alpha_min have no published values; 0.8 is the
/// documented default and parameter files must set them explicitly.
struct ModelParams {
    double s1 = 10.0;  // birth-rate saturation
    double s2 = 0.5;   // baseline death rate
    double s3 = 0.5;   // oxygen-dependent death rate
    double s4 = 10.0;  // death-rate saturation
    double k = 1.0;    // interphase drag
    double mu = 1.0;   // cell-phase viscosity
    double Q = 0.5;    // oxygen consumption rate
    double Q1hat = 0.0; // consumption saturation
    double alpha_star = 0.8; // stress reference fraction
    double alpha_min = 0.8;  // stress threshold fraction
    double ell0 = 1.0;       // initial tumour radius
    TractionMode traction_mode = TractionMode::literal;
    double eps_sing = 1e-8;  // guard on the (1 - alpha)^2 denominators

    void validate() const; // throws ErrorCategory::config
};

/// Admissible volume-fraction window for initial data: 0 < m <= alpha0 <= M < 1
/// on the support.
struct Bounds {
    double m_alpha = 0.005;
    double M_alpha = 0.95;

    void validate() const;
};

/// Net birth/death rate f(alpha, C).
double f_growth(double alpha, double C, const ModelParams& p);

/// Cell-phase stress Sigma(alpha) = alpha (alpha - alpha_star) / (1-alpha)^2
/// gated by H(alpha - alpha_min), with H(0) = 1.
double sigma_stress(double alpha, const ModelParams& p);

/// Traction mu du/dx prescribed at the free boundary; numerator per
/// ModelParams::traction_mode.
double boundary_traction(double alpha_at_front, const ModelParams& p);

/// Oxygen consumption -Q alpha C / (1 + Q1hat C); always <= 0.
double oxygen_sink(double alpha, double C, const ModelParams& p);

} // namespace exdom
