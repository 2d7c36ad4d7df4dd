#pragma once

#include <span>
#include <string>
#include <vector>

#include "exdom/trajectory.hpp"

namespace exdom {

/// Error metrics of one experiment. Entries that do not apply are NaN.
struct ErrorReport {
    double delta_ell = 0.0;     // |ell(T) - ell_h| / ell(T)
    double linf_interior = 0.0; // max |alpha - reference| on the interior window
    double l1_interior = 0.0;   // h * sum |alpha - reference| on the window
    double scheme_diff = 0.0;   // relative A-vs-B final-radius difference
};

/// |ell_exact - ell_h| / ell_exact
double relative_radius_error(double ell_exact, double ell_h);

/// A rectangular table of values keyed by (dx, alpha_thr); failed sweep cells
/// hold NaN.
struct SweepTable {
    std::vector<double> dx_values;
    std::vector<double> thr_values;
    std::vector<std::vector<double>> delta_ell; // [dx index][thr index]
};

/// Plain-text CSV with a header row; floats printed with 9 significant
/// digits; byte-identical output for identical input.
void write_csv(const std::string& path, std::span<const std::string> header,
               std::span<const std::vector<double>> rows);

void write_front_history(const std::string& path, const Trajectory& traj);
void write_sweep_table(const std::string& path, const SweepTable& table);

/// One snapshot file per time: `snapshot_<t>.csv` inside dir. Column layout
/// is the caller's (header + row matrix).
std::string snapshot_filename(const std::string& dir, double t);

void ensure_directory(const std::string& dir);

} // namespace exdom
