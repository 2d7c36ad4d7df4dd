#pragma once

#include <span>

#include "exdom/grid.hpp"
#include "exdom/model.hpp"

namespace exdom {

/// Nodes 0..j_front of a uniform grid, with x_{j_front} the recovered
/// boundary. At least two elements are required.
struct TruncatedMesh {
    int j_front;
    double h;

    TruncatedMesh(int j_front_, double h_); // throws domain_too_small
    int num_nodes() const { return j_front + 1; }
};

enum class OxygenScheme { backward_euler, forward_euler };

/// P1 Galerkin solve of the cell-velocity equation on (0, ell_h):
///
///   int k a/(1-a) u v + mu int a u' v' = int Sigma(a) v'
///                                      + [a T(a) - Sigma(a)]|_end * v(end)
///
/// with u(0) = 0 essential and T the boundary traction. Coefficients are
/// nodal P1 interpolants; element integrals use 2-point Gauss. The tridiagonal
/// system is SPD and solved directly; a nonpositive pivot reports
/// singular_coefficient. `extra_load`, when nonempty, holds nodal values of an
/// extra right-hand side g added as int g v (used by manufactured-solution
/// studies). `ell` scales the operator for the unit-interval form used by the
/// scaled-domain scheme (stiffness mu a / ell^2, gradient load Sigma / ell);
/// ell = 1 is the physical-domain solve.
NodalField solve_velocity(const TruncatedMesh& m, std::span<const double> alpha_nodes,
                          const ModelParams& p,
                          std::span<const double> extra_load = {}, double ell = 1.0);

/// One backward-Euler (default) P1 step of the oxygen equation on (0, ell_h):
/// consistent mass matrix, unit diffusivity, sink linear in the unknown with
/// the saturation denominator lagged at c_old; zero-flux at x = 0, C = 1
/// essential at the front. With `ell`, `dell` set, solves the scaled-domain
/// form with diffusivity 1/ell^2 and mesh advection -(xi dell / ell) dC/dxi.
/// forward_euler uses lumped mass and is conditionally stable.
NodalField advance_oxygen(const TruncatedMesh& m, std::span<const double> c_old,
                          std::span<const double> alpha_nodes, double dt,
                          const ModelParams& p,
                          OxygenScheme scheme = OxygenScheme::backward_euler,
                          double ell = 1.0, double dell = 0.0);

} // namespace exdom
