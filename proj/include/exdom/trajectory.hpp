#pragma once

#include <utility>
#include <vector>

#include "exdom/grid.hpp"

namespace exdom {

/// Cheap per-step observables: CFL, transport mass-balance residual, mass
/// removed by front truncation, recovered radius.
struct StepDiagnostics {
    double t = 0.0;
    double cfl = 0.0;
    double mass_residual = 0.0;
    double truncation_loss = 0.0;
    double ell_h = 0.0;
    bool front_at_end = false;
};

/// Fields at one instant, in physical coordinates.
struct Snapshot {
    double t = 0.0;
    std::vector<double> x_cells; // cell centres
    CellField alpha;
    std::vector<double> x_nodes;
    NodalField u;
    NodalField c;
    double ell_h = 0.0;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;                    // configured times plus t = T
    std::vector<std::pair<double, double>> front_history; // (t, ell_h) every step
    std::vector<StepDiagnostics> diagnostics;
    bool front_reached_domain_end = false;

    const Snapshot& final_snapshot() const { return snapshots.back(); }
    double final_radius() const { return front_history.back().second; }
};

} // namespace exdom
