#pragma once

#include <string>

#include "swipt/rng.hpp"

namespace swipt {

enum class Family { Rayleigh, Nakagami, Weibull, Ricean };

const char* family_name(Family f);

// Distribution of one user's channel power gain h with mean omega.
// shape holds m (integer >= 1) for Nakagami, k > 0 for Weibull and the
// line-of-sight factor K >= 0 for Ricean; Rayleigh ignores it.
struct FadingSpec {
    Family family = Family::Rayleigh;
    double shape = 1.0;
    double omega = 1.0;

    static FadingSpec rayleigh(double omega);
    static FadingSpec nakagami(int m, double omega);
    static FadingSpec weibull(double k, double omega);
    static FadingSpec ricean(double big_k, double omega);
};

// Scale constants the rate/energy expressions are written in.
// lambda applies to Rayleigh (1/omega), Nakagami (m/omega) and Weibull
// (Gamma(1 + 1/k)/omega); beta and mu_prime are the exponential-fit
// constants of the Ricean tail, in which case lambda is unused.
struct DerivedScale {
    double lambda = 0.0;
    double beta = 0.0;
    double mu_prime = 0.0;
};

DerivedScale derived_scale(const FadingSpec& spec);

// Exact density by default; the Ricean exponential fit is opt-in so callers
// choose which side of the approximation they are on, and the flag must
// match the one handed to cdf when both enter one integrand.
double pdf(const FadingSpec& spec, double x, bool use_ricean_approx = false);

// Exact cdf by default, with the same opt-in Ricean fit.
double cdf(const FadingSpec& spec, double x, bool use_ricean_approx = false);

double sample(const FadingSpec& spec, Rng& rng);

// Same family and shape, unit mean.
FadingSpec normalized(const FadingSpec& spec);

} // namespace swipt
