#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exdom/analytic.hpp"
#include "exdom/report.hpp"
#include "exdom/scheme_a.hpp"
#include "exdom/scheme_b.hpp"

namespace exdom {

/// Benchmark time step: the stated dt capped at each method's explicit
/// stability bound for unit advection speed (CFL 2/3 for MUSCL, 1 for
/// upwind), then rounded so that an integer number of steps lands on T.
double stable_case1_dt(TransportMethod method, double dx, double dt_base, double T);

struct Case1Options {
    TransportMethod method = TransportMethod::muscl();
    double dx = 0.02;
    double dt = 0.01;
    double alpha_thr = 0.004;
    Case1Profile profile = Case1Profile::cosine;
    double T = 5.0;
    double L = 7.2; // headroom past ell(T) = 6 so the recovered front is interior
    ModelParams params;
    std::vector<double> snapshot_times; // defaults to {T}
    std::string out_dir;                // empty: no files written
    double interior_margin = 0.2;       // error window ends this far before ell(T)
};

struct Case1Result {
    ErrorReport report;
    ErrorReport report_scaled; // scheme B against the same reference
    Trajectory extended;
    Trajectory scaled;
};

/// Runs scheme A (frozen fields) and scheme B on the Case-1 benchmark,
/// measures the radius and interior solution errors against the closed form,
/// and optionally writes front_history.csv, snapshot_<t>.csv, errors.csv.
Case1Result run_case1(const Case1Options& opt);

struct SweepOptions {
    TransportMethod method = TransportMethod::muscl();
    std::vector<double> dx_values;
    std::vector<double> thr_values;
    Case1Profile profile = Case1Profile::cosine;
    double dt_base = 0.01;
    double T = 5.0;
    double L = 7.2;
    ModelParams params;
    std::string out_dir;
    int threads = 0; // 0: hardware concurrency
};

/// Full (dx, alpha_thr) cross-product of Case-1 runs on a worker pool.
/// Failed cells are logged and recorded as NaN; the sweep continues.
SweepTable sweep_thresholds(const SweepOptions& opt);

struct Case2Options {
    TransportMethod method = TransportMethod::upwind();
    double dx = 0.01;
    double dt = 0.01;
    double T = 228.0;
    double L = 25.0;
    std::optional<double> alpha_thr; // default 0.01 (U) / 0.004 (M)
    ModelParams params;
    std::vector<double> snapshot_times; // defaults to 25, 50, ..., 225
    std::string out_dir;
    double interior_margin = 0.2;
};

struct Case2Result {
    ErrorReport report; // delta_ell is NaN: no exact radius exists
    Trajectory extended;
    Trajectory scaled;
};

/// Full-system run of both schemes from alpha0 = 0.8 on [0, 1]; the scheme
/// difference on the final radius quantifies the error.
Case2Result run_case2(const Case2Options& opt);

} // namespace exdom
