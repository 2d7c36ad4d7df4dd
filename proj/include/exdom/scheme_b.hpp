#pragma once

#include <functional>

#include "exdom/fem.hpp"
#include "exdom/grid.hpp"
#include "exdom/model.hpp"
#include "exdom/scheme_a.hpp"
#include "exdom/trajectory.hpp"
#include "exdom/transport.hpp"

namespace exdom {

/// State of the classical solver on the scaled domain xi = x / ell(t).
struct ScaledState {
    double t = 0.0;
    double ell = 0.0;
    CellField alpha; // on xi-cells of (0, 1)
    NodalField u;    // physical velocity at xi-nodes
    NodalField c;
};

struct SchemeBConfig {
    double dxi = 0.02;
    double dt = 0.01;
    double T = 5.0;
    TransportMethod method = TransportMethod::muscl();
    ModelParams params;
    Bounds bounds;
    CaseMode mode = CaseMode::full_system;
    double c0 = 1.0;
    OxygenScheme oxygen = OxygenScheme::backward_euler;
    std::vector<double> snapshot_times;
    std::function<double(double)> alpha0; // physical coordinate on (0, ell0)
};

/// Effective transport speed at each xi-node: (u - xi ell') / ell. Mesh
/// motion enters the scheme only through this relative flux.
std::vector<double> scaled_face_speeds(const Grid& xi_grid, const NodalField& u,
                                       double ell, double dell);

/// Advances the chain-rule-transformed system on (0, 1) and reports the
/// trajectory in physical coordinates x = xi ell(t). The radius obeys the
/// explicit Euler update ell += dt u(1).
Trajectory simulate_scaled(const SchemeBConfig& cfg);

/// Linear resampling of a snapshot's fields onto another grid (for pointwise
/// scheme differencing); outside the source domain alpha, u fill with 0 and
/// c with 1.
CellField resample_alpha(const Snapshot& snap, std::span<const double> x_targets);
NodalField resample_nodal(std::span<const double> x_src, std::span<const double> values,
                          std::span<const double> x_targets, double outer_fill);

} // namespace exdom
