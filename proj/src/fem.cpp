#include "exdom/fem.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "exdom/errors.hpp"

namespace exdom {

namespace {

// 2-point Gauss rule on the reference element [0, 1].
constexpr std::array<double, 2> kGaussPoint = {0.5 - 0.28867513459481287, 0.5 + 0.28867513459481287};
constexpr std::array<double, 2> kGaussWeight = {0.5, 0.5};

struct Tridiagonal {
    std::vector<double> lower, diag, upper, rhs;

    explicit Tridiagonal(int n) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}
    int size() const { return static_cast<int>(diag.size()); }
};

// Thomas elimination. With require_spd the pivots of the (symmetric) system
// must stay positive, which is the Cholesky-existence test.
std::vector<double> solve_tridiagonal(Tridiagonal sys, bool require_spd) {
    const int n = sys.size();
    std::vector<double> x(n);
    for (int i = 1; i < n; ++i) {
        const double pivot = sys.diag[i - 1];
        if (require_spd ? !(pivot > 0.0) : pivot == 0.0)
            fail(ErrorCategory::singular_coefficient,
                 "tridiagonal solve hit a " + std::string(require_spd ? "nonpositive" : "zero") +
                     " pivot at row " + std::to_string(i - 1));
        const double w = sys.lower[i] / pivot;
        sys.diag[i] -= w * sys.upper[i - 1];
        sys.rhs[i] -= w * sys.rhs[i - 1];
    }
    const double last = sys.diag[n - 1];
    if (require_spd ? !(last > 0.0) : last == 0.0)
        fail(ErrorCategory::singular_coefficient, "tridiagonal solve hit a singular final pivot");
    x[n - 1] = sys.rhs[n - 1] / last;
    for (int i = n - 2; i >= 0; --i)
        x[i] = (sys.rhs[i] - sys.upper[i] * x[i + 1]) / sys.diag[i];
    return x;
}

inline double p1(double xi, int local) { return local == 0 ? 1.0 - xi : xi; }
inline double dp1(int local) { return local == 0 ? -1.0 : 1.0; }

// Adds h * int coeff(x) phi_p phi_q over one element, coeff P1-interpolated.
void add_mass_like(Tridiagonal& sys, int e, double h, double cl, double cr) {
    double loc[2][2] = {{0, 0}, {0, 0}};
    for (int gp = 0; gp < 2; ++gp) {
        const double xi = kGaussPoint[gp];
        const double c = cl * (1.0 - xi) + cr * xi;
        const double w = kGaussWeight[gp] * h * c;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                loc[p][q] += w * p1(xi, p) * p1(xi, q);
    }
    sys.diag[e] += loc[0][0];
    sys.diag[e + 1] += loc[1][1];
    sys.upper[e] += loc[0][1];
    sys.lower[e + 1] += loc[1][0];
}

// Adds int coeff(x) phi_p' phi_q' over one element.
void add_stiffness(Tridiagonal& sys, int e, double h, double cl, double cr) {
    const double cbar = 0.5 * (cl + cr); // 2-pt Gauss of a linear coefficient
    const double val = cbar / h;
    sys.diag[e] += val;
    sys.diag[e + 1] += val;
    sys.upper[e] -= val;
    sys.lower[e + 1] -= val;
}

// Adds int coeff(x) phi_q' phi_p over one element (advection, not symmetric).
void add_advection(Tridiagonal& sys, int e, double cl, double cr) {
    double loc[2][2] = {{0, 0}, {0, 0}};
    for (int gp = 0; gp < 2; ++gp) {
        const double xi = kGaussPoint[gp];
        const double c = cl * (1.0 - xi) + cr * xi;
        const double w = kGaussWeight[gp] * c;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                loc[p][q] += w * p1(xi, p) * dp1(q);
    }
    sys.diag[e] += loc[0][0];
    sys.diag[e + 1] += loc[1][1];
    sys.upper[e] += loc[0][1];
    sys.lower[e + 1] += loc[1][0];
}

// Adds int g(x) phi_p with g P1-interpolated.
void add_load(Tridiagonal& sys, int e, double h, double gl, double gr) {
    for (int gp = 0; gp < 2; ++gp) {
        const double xi = kGaussPoint[gp];
        const double g = gl * (1.0 - xi) + gr * xi;
        const double w = kGaussWeight[gp] * h * g;
        sys.rhs[e] += w * p1(xi, 0);
        sys.rhs[e + 1] += w * p1(xi, 1);
    }
}

// Adds int S(x) phi_p' with S P1-interpolated.
void add_gradient_load(Tridiagonal& sys, int e, double sl, double sr) {
    const double sbar = 0.5 * (sl + sr);
    sys.rhs[e] -= sbar;
    sys.rhs[e + 1] += sbar;
}

void check_admissible(std::span<const double> alpha_nodes, const ModelParams& p) {
    for (double a : alpha_nodes)
        if (a >= 1.0 - p.eps_sing)
            fail(ErrorCategory::singular_coefficient,
                 "nodal volume fraction reaches the singular limit");
}

} // namespace

TruncatedMesh::TruncatedMesh(int j_front_, double h_) : j_front(j_front_), h(h_) {
    if (j_front < 2)
        fail(ErrorCategory::domain_too_small,
             "truncated mesh needs at least two elements, got front node " +
                 std::to_string(j_front));
    if (!(h > 0.0))
        fail(ErrorCategory::config, "element width must be > 0");
}

NodalField solve_velocity(const TruncatedMesh& m, std::span<const double> alpha_nodes,
                          const ModelParams& p, std::span<const double> extra_load,
                          double ell) {
    const int n = m.num_nodes();
    if (static_cast<int>(alpha_nodes.size()) != n)
        fail(ErrorCategory::config, "alpha_nodes does not cover the truncated mesh");
    if (!extra_load.empty() && static_cast<int>(extra_load.size()) != n)
        fail(ErrorCategory::config, "extra_load does not cover the truncated mesh");
    check_admissible(alpha_nodes, p);

    std::vector<double> reaction(n), stiff(n), sigma(n);
    for (int i = 0; i < n; ++i) {
        const double a = alpha_nodes[i];
        reaction[i] = p.k * a / (1.0 - a);
        stiff[i] = p.mu * a / (ell * ell);
        sigma[i] = sigma_stress(a, p) / ell;
    }

    Tridiagonal sys(n);
    for (int e = 0; e < n - 1; ++e) {
        add_mass_like(sys, e, m.h, reaction[e], reaction[e + 1]);
        add_stiffness(sys, e, m.h, stiff[e], stiff[e + 1]);
        add_gradient_load(sys, e, sigma[e], sigma[e + 1]);
        if (!extra_load.empty())
            add_load(sys, e, m.h, extra_load[e], extra_load[e + 1]);
    }

    // Natural boundary term at the front; exactly zero in natural mode.
    const double a_end = alpha_nodes[n - 1];
    sys.rhs[n - 1] += (a_end * boundary_traction(a_end, p) - sigma[n - 1] * ell) / ell;

    // Essential u(0) = 0: solve rows 1..n-1 only.
    Tridiagonal inner(n - 1);
    for (int i = 1; i < n; ++i) {
        inner.diag[i - 1] = sys.diag[i];
        inner.rhs[i - 1] = sys.rhs[i];
        if (i > 1) inner.lower[i - 1] = sys.lower[i];
        if (i < n - 1) inner.upper[i - 1] = sys.upper[i];
    }
    const std::vector<double> u_inner = solve_tridiagonal(std::move(inner), /*require_spd=*/true);

    NodalField u(n, 0.0);
    for (int i = 1; i < n; ++i) u[i] = u_inner[i - 1];
    return u;
}

NodalField advance_oxygen(const TruncatedMesh& m, std::span<const double> c_old,
                          std::span<const double> alpha_nodes, double dt,
                          const ModelParams& p, OxygenScheme scheme, double ell,
                          double dell) {
    const int n = m.num_nodes();
    if (static_cast<int>(c_old.size()) != n || static_cast<int>(alpha_nodes.size()) != n)
        fail(ErrorCategory::config, "fields do not cover the truncated mesh");
    if (!(dt > 0.0))
        fail(ErrorCategory::config, "dt must be > 0");

    // Sink linear in the unknown with lagged saturation denominator; exact
    // when Q1hat = 0.
    std::vector<double> sink(n), adv(n);
    for (int i = 0; i < n; ++i) {
        const double denom = 1.0 + p.Q1hat * c_old[i];
        if (!(denom > 0.0))
            fail(ErrorCategory::singular_coefficient, "oxygen saturation denominator vanished");
        sink[i] = p.Q * alpha_nodes[i] / denom;
        adv[i] = (i * m.h) * dell / ell; // mesh-advection speed xi dell / ell
    }
    const double diffusivity = 1.0 / (ell * ell);

    if (scheme == OxygenScheme::forward_euler) {
        // Lumped mass, fully explicit.
        Tridiagonal op(n);
        for (int e = 0; e < n - 1; ++e) {
            add_stiffness(op, e, m.h, diffusivity, diffusivity);
            add_mass_like(op, e, m.h, sink[e], sink[e + 1]);
            if (dell != 0.0) {
                Tridiagonal tmp(n);
                add_advection(tmp, e, adv[e], adv[e + 1]);
                for (int i = 0; i < n; ++i) {
                    op.lower[i] -= tmp.lower[i];
                    op.diag[i] -= tmp.diag[i];
                    op.upper[i] -= tmp.upper[i];
                }
            }
        }
        NodalField c(n);
        for (int i = 0; i < n; ++i) {
            const double lumped = (i == 0 || i == n - 1) ? 0.5 * m.h : m.h;
            double opc = op.diag[i] * c_old[i];
            if (i > 0) opc += op.lower[i] * c_old[i - 1];
            if (i < n - 1) opc += op.upper[i] * c_old[i + 1];
            c[i] = c_old[i] - dt / lumped * opc;
        }
        c[n - 1] = 1.0;
        return c;
    }

    // Backward Euler: (M/dt + K + M_sink - Adv) c = M/dt c_old.
    Tridiagonal sys(n);
    Tridiagonal mass(n);
    for (int e = 0; e < n - 1; ++e) {
        add_mass_like(mass, e, m.h, 1.0, 1.0);
        add_stiffness(sys, e, m.h, diffusivity, diffusivity);
        add_mass_like(sys, e, m.h, sink[e], sink[e + 1]);
    }
    if (dell != 0.0) {
        Tridiagonal advm(n);
        for (int e = 0; e < n - 1; ++e) add_advection(advm, e, adv[e], adv[e + 1]);
        for (int i = 0; i < n; ++i) {
            sys.lower[i] -= advm.lower[i];
            sys.diag[i] -= advm.diag[i];
            sys.upper[i] -= advm.upper[i];
        }
    }
    for (int i = 0; i < n; ++i) {
        sys.diag[i] += mass.diag[i] / dt;
        sys.lower[i] += mass.lower[i] / dt;
        sys.upper[i] += mass.upper[i] / dt;
        double mc = mass.diag[i] * c_old[i];
        if (i > 0) mc += mass.lower[i] * c_old[i - 1];
        if (i < n - 1) mc += mass.upper[i] * c_old[i + 1];
        sys.rhs[i] = mc / dt;
    }

    // Essential C(ell_h) = 1.
    sys.rhs[n - 2] -= sys.upper[n - 2] * 1.0;
    sys.upper[n - 2] = 0.0;
    sys.lower[n - 1] = 0.0;
    sys.diag[n - 1] = 1.0;
    sys.rhs[n - 1] = 1.0;

    return solve_tridiagonal(std::move(sys), /*require_spd=*/false);
}

} // namespace exdom
