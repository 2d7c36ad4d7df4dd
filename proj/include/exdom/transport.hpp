#pragma once

#include <span>

#include "exdom/grid.hpp"
#include "exdom/model.hpp"

namespace exdom {

enum class SlopeLimiter { minmod };

/// Finite-volume transport scheme: first-order upwind Godunov (method U) or
/// limited MUSCL reconstruction with Godunov flux (method M).
struct TransportMethod {
    enum class Scheme { upwind, muscl };

    Scheme scheme = Scheme::muscl;
    SlopeLimiter limiter = SlopeLimiter::minmod;

    static TransportMethod upwind() { return {Scheme::upwind, SlopeLimiter::minmod}; }
    static TransportMethod muscl() { return {Scheme::muscl, SlopeLimiter::minmod}; }
};

/// Godunov flux of the locally linear flux u*alpha: upwinds left for
/// u >= 0, right otherwise.
double godunov_flux(double alpha_left, double alpha_right, double u_face);

/// Reconstructed states at every face, size M+1 each. left[j] is the trace
/// from cell j-1, right[j] the trace from cell j; the entries at j = 0 and
/// j = M facing outside the domain hold the ghost state 0. Boundary cells use
/// zero slope.
struct FaceTraces {
    std::vector<double> left;
    std::vector<double> right;
};

FaceTraces muscl_face_values(const Grid& g, const CellField& alpha,
                             SlopeLimiter limiter = SlopeLimiter::minmod);

/// max_i |u_i| dt / h
double cfl_number(const NodalField& u, double dt, double h);

struct TransportDiagnostics {
    double cfl = 0.0;
    double source_integral = 0.0; // dt * h * sum_i alpha_i * rate_i
};

/// One explicit Euler step of d(alpha)/dt + d(v alpha)/dx = alpha * rate with
/// per-face speeds v (size M+1) and per-cell rates (size M). Ghost state 0
/// outside the domain on both sides. Throws on CFL > 1 and on non-finite
/// output.
CellField advance_conservative(double h, const CellField& alpha,
                               std::span<const double> face_speed,
                               std::span<const double> cell_rate, double dt,
                               TransportMethod method,
                               TransportDiagnostics* diag = nullptr);

/// One transport step of the volume-fraction equation on the extended domain:
/// face speeds from the nodal velocity, source alpha * f(alpha, C) with C
/// averaged to cell centres.
CellField advance_alpha(const Grid& g, const CellField& alpha, const NodalField& u,
                        const NodalField& C, double dt, TransportMethod method,
                        const ModelParams& p, TransportDiagnostics* diag = nullptr);

} // namespace exdom
