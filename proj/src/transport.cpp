#include "exdom/transport.hpp"

#include <cmath>
#include <string>

#include "exdom/errors.hpp"

namespace exdom {

namespace {

inline double minmod(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

} // namespace

double godunov_flux(double alpha_left, double alpha_right, double u_face) {
    return u_face >= 0.0 ? u_face * alpha_left : u_face * alpha_right;
}

FaceTraces muscl_face_values(const Grid& g, const CellField& alpha, SlopeLimiter) {
    const int m = g.num_cells();
    if (m < 3)
        fail(ErrorCategory::config, "MUSCL reconstruction needs at least 3 cells");
    FaceTraces tr;
    tr.left.assign(m + 1, 0.0);
    tr.right.assign(m + 1, 0.0);
    // Limited slope times h per cell; boundary cells use zero slope.
    for (int i = 0; i < m; ++i) {
        double s = 0.0;
        if (i > 0 && i < m - 1)
            s = minmod(alpha[i] - alpha[i - 1], alpha[i + 1] - alpha[i]);
        tr.left[i + 1] = alpha[i] + 0.5 * s;
        tr.right[i] = alpha[i] - 0.5 * s;
    }
    // tr.left[0] and tr.right[m] stay at the ghost state 0.
    return tr;
}

double cfl_number(const NodalField& u, double dt, double h) {
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    return umax * dt / h;
}

CellField advance_conservative(double h, const CellField& alpha,
                               std::span<const double> face_speed,
                               std::span<const double> cell_rate, double dt,
                               TransportMethod method, TransportDiagnostics* diag) {
    const int m = static_cast<int>(alpha.size());
    if (static_cast<int>(face_speed.size()) != m + 1)
        fail(ErrorCategory::config, "face speed array must have M+1 entries");
    if (static_cast<int>(cell_rate.size()) != m)
        fail(ErrorCategory::config, "cell rate array must have M entries");

    double vmax = 0.0;
    for (double v : face_speed) vmax = std::max(vmax, std::abs(v));
    const double cfl = vmax * dt / h;
    if (cfl > 1.0 + 1e-12)
        fail(ErrorCategory::cfl_violation,
             "CFL " + std::to_string(cfl) + " exceeds 1");

    // Face states: reconstructed traces for MUSCL, cell values for upwind,
    // ghost state 0 outside the domain on both sides.
    std::vector<double> left(m + 1, 0.0), right(m + 1, 0.0);
    if (method.scheme == TransportMethod::Scheme::muscl && m >= 3) {
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            if (i > 0 && i < m - 1)
                s = minmod(alpha[i] - alpha[i - 1], alpha[i + 1] - alpha[i]);
            left[i + 1] = alpha[i] + 0.5 * s;
            right[i] = alpha[i] - 0.5 * s;
        }
    } else {
        for (int i = 0; i < m; ++i) {
            left[i + 1] = alpha[i];
            right[i] = alpha[i];
        }
    }

    std::vector<double> flux(m + 1);
    for (int j = 0; j <= m; ++j)
        flux[j] = godunov_flux(left[j], right[j], face_speed[j]);

    CellField out(m);
    double source_integral = 0.0;
    const double r = dt / h;
    for (int i = 0; i < m; ++i) {
        const double src = dt * alpha[i] * cell_rate[i];
        out[i] = alpha[i] - r * (flux[i + 1] - flux[i]) + src;
        source_integral += src;
    }
    source_integral *= h;

    for (double v : out)
        if (!std::isfinite(v))
            fail(ErrorCategory::non_finite_state, "transport produced a non-finite value");

    if (diag) {
        diag->cfl = cfl;
        diag->source_integral = source_integral;
    }
    return out;
}

CellField advance_alpha(const Grid& g, const CellField& alpha, const NodalField& u,
                        const NodalField& C, double dt, TransportMethod method,
                        const ModelParams& p, TransportDiagnostics* diag) {
    const int m = g.num_cells();
    if (static_cast<int>(alpha.size()) != m || static_cast<int>(u.size()) != m + 1 ||
        static_cast<int>(C.size()) != m + 1)
        fail(ErrorCategory::config, "field sizes do not match grid");

    const NodalField& v = node_to_face_velocity(u);
    std::vector<double> rate(m);
    for (int i = 0; i < m; ++i) {
        const double c_mid = 0.5 * (C[i] + C[i + 1]);
        rate[i] = f_growth(alpha[i], c_mid, p);
    }
    return advance_conservative(g.spacing(), alpha, v, rate, dt, method, diag);
}

} // namespace exdom
