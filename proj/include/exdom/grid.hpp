#pragma once

#include <span>
#include <vector>

namespace exdom {

/// One value per cell (volume fraction lives here).
using CellField = std::vector<double>;
/// One value per node (velocity and oxygen live here).
using NodalField = std::vector<double>;

/// Uniform fixed mesh on (0, L): M cells (x_i, x_{i+1}) with centres at
/// (i + 1/2) h and M+1 nodes x_i = i h. Finite-volume faces coincide with
/// finite-element nodes, so no interpolation enters the flux from the
/// velocity field.
class Grid {
public:
    Grid(double length, int num_cells);

    /// Builds a grid from a target spacing; L/dx must be integral.
    static Grid with_spacing(double length, double dx);

    double length() const { return L_; }
    int num_cells() const { return M_; }
    int num_nodes() const { return M_ + 1; }
    double spacing() const { return h_; }
    double node(int i) const { return i == M_ ? L_ : i * h_; }
    double cell_center(int i) const { return (i + 0.5) * h_; }

    std::vector<double> cell_centers() const;
    std::vector<double> nodes() const;

private:
    double L_;
    int M_;
    double h_;
};

/// Uniform time axis with N dt = T. T = 0 yields N = 0 (no steps).
struct TimeControl {
    double dt = 0.0;
    double T = 0.0;
    long N = 0;

    static TimeControl from_step(double T, double dt);
};

/// Node value = mean of the adjacent cells; endpoints copy the single
/// neighbour. Exact for affine data at interior nodes.
NodalField cell_to_node(const Grid& g, const CellField& cf);

/// Faces are nodes on this mesh; the velocity carries over unchanged.
inline const NodalField& node_to_face_velocity(const NodalField& nf) { return nf; }

/// Piecewise-linear interpolation of (xs, ys) at x, clamped to fill values
/// outside [xs.front(), xs.back()]. xs must be strictly increasing.
double linear_interp(std::span<const double> xs, std::span<const double> ys,
                     double x, double left_fill, double right_fill);

} // namespace exdom
