#pragma once

#include <functional>

namespace swipt {

struct QuadratureConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-30;
    int max_subdivisions = 4000;
    // Integration window upper edge: smallest dyadic point with
    // 1 - cdf < tail_cut.
    double tail_cut = 1e-12;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // accumulated error estimate
    int panels = 0;
};

// Globally adaptive Gauss-Kronrod (7, 15) integration of fn over [a, b].
// Splits the worst panel until the summed error estimate meets
// max(abs_tol, rel_tol * |value|); throws QuadratureFailure if the panel
// budget runs out first.
QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureConfig& cfg = {});

// Upper integration limit for a distribution supported on [0, inf):
// doubles from the given scale until the survival function drops below
// tail_cut.
double upper_tail_cutoff(const std::function<double(double)>& cdf_fn, double scale,
                         double tail_cut);

} // namespace swipt
