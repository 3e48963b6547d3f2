#pragma once

namespace swipt {

inline constexpr double kEulerGamma = 0.5772156649015329;

// Convergence controls for the series / continued-fraction evaluations.
struct Accuracy {
    double rel_tol = 1e-15;
    double abs_tol = 1e-300;
    int max_terms = 500;
};

// Exponential integral E1(x), x > 0.
double exp_integral_e1(double x, const Accuracy& acc = {});

// exp(x) * E1(x), stable for large x where E1 alone underflows.
double exp_scaled_e1(double x, const Accuracy& acc = {});

// Upper incomplete gamma Gamma(s, x), s > 0, x >= 0 (not regularized).
double upper_incomplete_gamma(double s, double x, const Accuracy& acc = {});

// Digamma psi(x), x > 0.
double digamma(double x);

// ln I0(z), z >= 0, overflow-safe for large z.
double log_bessel_i0(double z);

// First-order Marcum Q1(a, b), a >= 0, b >= 0, via its convergent
// Poisson-weighted series.
double marcum_q1_exact(double a, double b, const Accuracy& acc = {});

// Exponential-type fit Q1(a, b) ~= exp(-exp(nu) * b^mu).  Small-argument
// branch applies below a = 0.1 and recovers Q1(0, b) = exp(-b^2/2) exactly
// as a -> 0; above the threshold a quartic fit in a takes over.
struct MarcumFit {
    double mu;
    double nu;
};
MarcumFit marcum_approx_params(double a);

double marcum_q1_approx(double a, double b);

} // namespace swipt
