#include "exdom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exdom/errors.hpp"

namespace exdom {

Grid::Grid(double length, int num_cells) : L_(length), M_(num_cells) {
    if (!(length > 0.0))
        fail(ErrorCategory::config, "grid length must be > 0");
    if (num_cells < 1)
        fail(ErrorCategory::config, "grid needs at least one cell");
    h_ = L_ / M_;
}

Grid Grid::with_spacing(double length, double dx) {
    if (!(dx > 0.0))
        fail(ErrorCategory::config, "dx must be > 0");
    const double cells = length / dx;
    const int m = static_cast<int>(std::llround(cells));
    if (m < 1 || std::abs(m * dx - length) > 1e-9 * std::max(1.0, length))
        fail(ErrorCategory::config,
             "dx = " + std::to_string(dx) + " does not divide L = " + std::to_string(length));
    return Grid(length, m);
}

std::vector<double> Grid::cell_centers() const {
    std::vector<double> xs(M_);
    for (int i = 0; i < M_; ++i) xs[i] = cell_center(i);
    return xs;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> xs(M_ + 1);
    for (int i = 0; i <= M_; ++i) xs[i] = node(i);
    return xs;
}

TimeControl TimeControl::from_step(double T, double dt) {
    if (!(dt > 0.0))
        fail(ErrorCategory::config, "dt must be > 0");
    if (T < 0.0)
        fail(ErrorCategory::config, "T must be >= 0");
    TimeControl tc;
    tc.dt = dt;
    tc.T = T;
    tc.N = std::llround(T / dt);
    if (std::abs(tc.N * dt - T) > 1e-9 * std::max(1.0, T))
        fail(ErrorCategory::config,
             "dt = " + std::to_string(dt) + " does not divide T = " + std::to_string(T));
    return tc;
}

NodalField cell_to_node(const Grid& g, const CellField& cf) {
    const int m = g.num_cells();
    if (static_cast<int>(cf.size()) != m)
        fail(ErrorCategory::config, "cell field size does not match grid");
    NodalField nf(m + 1);
    nf[0] = cf[0];
    for (int i = 1; i < m; ++i) nf[i] = 0.5 * (cf[i - 1] + cf[i]);
    nf[m] = cf[m - 1];
    return nf;
}

double linear_interp(std::span<const double> xs, std::span<const double> ys,
                     double x, double left_fill, double right_fill) {
    if (xs.empty()) return right_fill;
    if (x < xs.front()) return left_fill;
    if (x > xs.back()) return right_fill;
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<size_t>(it - xs.begin());
    if (i == 0) return ys[0];
    const double x0 = xs[i - 1], x1 = xs[i];
    const double w = (x - x0) / (x1 - x0);
    return (1.0 - w) * ys[i - 1] + w * ys[i];
}

} // namespace exdom
