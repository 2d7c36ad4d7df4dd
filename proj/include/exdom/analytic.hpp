#pragma once

#include "exdom/model.hpp"

namespace exdom {

/// Case-1 initial data, each supported on [0, 1]:
///   cosine   : 0.5 (0.02 + cos^2 x)
///   sine     : 0.5 (0.02 + sin^2 x)
///   exp_ratio: 0.5 (1 + exp((x-0.5)^2)) / (1 + exp(2 (x-0.5)^2))
enum class Case1Profile { cosine, sine, exp_ratio };

double initial_profile(Case1Profile kind, double x);

/// c2 = (s2 + s3) / (1 + s4); 1/11 with the reference parameter set.
double case1_c2(const ModelParams& p);

/// Closed-form solution of the frozen-field (u = C = 1) transport equation:
/// logistic evolution of alpha_0(x - t) along characteristics.
double exact_alpha_case1(double t, double x, Case1Profile kind, const ModelParams& p);

/// ell(t) = ell0 + t for unit boundary velocity.
double exact_radius_case1(double t, double ell0);

/// Independent verification path: classical RK4 on d(alpha)/ds =
/// alpha f(alpha, 1) along the characteristic through (t, x). Agrees with the
/// closed form to O(substeps^-4).
double characteristic_oracle(double t, double x, Case1Profile kind,
                             const ModelParams& p, int substeps);

} // namespace exdom
