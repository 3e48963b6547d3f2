#include "swipt/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

// Lentz's algorithm seed; keeps denominators away from zero.
constexpr double kTiny = 1e-300;

double e1_series(double x, const Accuracy& acc) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= acc.max_terms; ++k) {
        term *= -x / k;
        double add = -term / k;
        sum += add;
        if (std::fabs(add) < acc.rel_tol * std::fabs(sum) + acc.abs_tol)
            return -kEulerGamma - std::log(x) + sum;
    }
    throw SeriesDivergence("E1 series stalled at x = " + std::to_string(x));
}

// Continued-fraction factor; E1(x) = exp(-x) * e1_contfrac(x).
double e1_contfrac(double x, const Accuracy& acc) {
    // E1(x) = exp(-x) / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= acc.max_terms; ++k) {
        double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < acc.rel_tol)
            return h;
    }
    throw SeriesDivergence("E1 continued fraction stalled at x = " + std::to_string(x));
}

// Regularized lower series P(s, x); valid for x < s + 1.
double gamma_p_series(double s, double x, const Accuracy& acc) {
    double ap = s;
    double sum = 1.0 / s;
    double term = sum;
    for (int k = 0; k < acc.max_terms; ++k) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * acc.rel_tol)
            return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw SeriesDivergence("incomplete gamma series stalled, s = " + std::to_string(s));
}

// Regularized upper continued fraction Q(s, x); valid for x >= s + 1.
double gamma_q_contfrac(double s, double x, const Accuracy& acc) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= acc.max_terms; ++k) {
        double a = -k * (k - s);
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + a / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < acc.rel_tol)
            return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
    throw SeriesDivergence("incomplete gamma continued fraction stalled, s = " +
                           std::to_string(s));
}

// Regularized upper gamma Q(s, x).
double regularized_q(double s, double x, const Accuracy& acc) {
    if (x == 0.0)
        return 1.0;
    return x < s + 1.0 ? 1.0 - gamma_p_series(s, x, acc) : gamma_q_contfrac(s, x, acc);
}

} // namespace

double exp_integral_e1(double x, const Accuracy& acc) {
    if (!(x > 0.0))
        throw std::domain_error("E1 requires x > 0");
    return x < 1.0 ? e1_series(x, acc) : std::exp(-x) * e1_contfrac(x, acc);
}

double exp_scaled_e1(double x, const Accuracy& acc) {
    if (!(x > 0.0))
        throw std::domain_error("exp_scaled_e1 requires x > 0");
    return x < 1.0 ? std::exp(x) * e1_series(x, acc) : e1_contfrac(x, acc);
}

double upper_incomplete_gamma(double s, double x, const Accuracy& acc) {
    if (!(s > 0.0))
        throw std::domain_error("upper_incomplete_gamma requires s > 0");
    if (!(x >= 0.0))
        throw std::domain_error("upper_incomplete_gamma requires x >= 0");
    if (x == 0.0)
        return std::tgamma(s);
    if (x < s + 1.0)
        return std::tgamma(s) * (1.0 - gamma_p_series(s, x, acc));
    return std::tgamma(s) * gamma_q_contfrac(s, x, acc);
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma requires x > 0");
    double result = 0.0;
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic expansion in 1/x^2, good to ~1e-16 for x >= 8.
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    result -= inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
              inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 -
              inv2 * (1.0 / 132.0 -
              inv2 * (691.0 / 32760.0))))));
    return result;
}

double log_bessel_i0(double z) {
    if (!(z >= 0.0))
        throw std::domain_error("log_bessel_i0 requires z >= 0");
    if (z <= 600.0)
        return std::log(std::cyl_bessel_i(0.0, z));
    // ln I0(z) = z - ln(2 pi z)/2 + ln(1 + 1/(8z) + 9/(128 z^2) + ...)
    double r = 1.0 / (8.0 * z);
    double series = 1.0 + r * (1.0 + r * (4.5 + r * (37.5 + r * 459.375)));
    return z - 0.5 * std::log(2.0 * M_PI * z) + std::log(series);
}

double marcum_q1_exact(double a, double b, const Accuracy& acc) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw std::domain_error("marcum_q1_exact requires a, b >= 0");
    if (b == 0.0)
        return 1.0;
    double u = 0.5 * a * a;
    double y = 0.5 * b * b;
    if (u == 0.0)
        return std::exp(-y);
    if (y < 1e-290)   // Q1(a, b->0) = 1 up to O(y); also keeps k/y finite below
        return 1.0;
    // Q1(a,b) = sum_k Pois(k; u) * Q(k+1, y) with Q(k+1, y) the regularized
    // upper gamma at integer shape.  Anchor the recurrences at the Poisson
    // mode so both wings decay geometrically and the tail bounds stay
    // meaningful even when the result is far below 1.
    int k0 = static_cast<int>(u);
    double lfact = std::lgamma(k0 + 1.0);
    double pois0 = std::exp(-u + k0 * std::log(u) - lfact);   // Pois(k0; u)
    double gterm0 = std::exp(-y + k0 * std::log(y) - lfact);  // e^{-y} y^k0 / k0!
    double q0 = regularized_q(k0 + 1.0, y, acc);              // Q(k0+1, y)
    double sum = pois0 * q0;
    long cap = 20L * acc.max_terms;

    // Upward wing; Q(k+1, y) climbs toward 1, Poisson mass decays past the mode.
    double pois = pois0, gterm = gterm0, q = q0;
    bool converged = false;
    for (long k = k0 + 1; k <= k0 + cap; ++k) {
        pois *= u / k;
        gterm *= y / k;
        q += gterm;
        sum += pois * (q < 1.0 ? q : 1.0);
        double rho = u / (k + 1.0);
        if (rho < 1.0 && pois * rho / (1.0 - rho) < acc.rel_tol * sum + acc.abs_tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SeriesDivergence("Marcum Q1 series stalled at a = " + std::to_string(a) +
                               ", b = " + std::to_string(b));
    // Downward wing; the Q recurrence subtracts, so clamp the cancellation.
    pois = pois0, gterm = gterm0, q = q0;
    converged = k0 == 0;
    for (int k = k0; k >= 1 && k >= k0 - cap; --k) {
        pois *= k / u;      // Pois(k-1; u)
        q -= gterm;         // Q(k, y)
        gterm *= k / y;     // e^{-y} y^{k-1} / (k-1)!
        if (q < 0.0) q = 0.0;
        sum += pois * q;
        // Poisson mass below k-1 decays at least geometrically with ratio (k-1)/u.
        if (k == 1 || pois * q * (k - 1.0) / (u - (k - 1.0)) < acc.rel_tol * sum + acc.abs_tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SeriesDivergence("Marcum Q1 series stalled at a = " + std::to_string(a) +
                               ", b = " + std::to_string(b));
    return sum < 1.0 ? sum : 1.0;
}

MarcumFit marcum_approx_params(double a) {
    if (!(a >= 0.0))
        throw std::domain_error("marcum_approx_params requires a >= 0");
    if (a < 0.1) {
        // Leading behaviour plus a^4 correction; exact at a = 0 where
        // Q1(0, b) = exp(-b^2/2) means mu = 2, nu = -ln 2.
        double a2 = a * a;
        double a4 = a2 * a2;
        double denom = 9.0 * M_PI * M_PI - 80.0;
        double mu = 2.0 + 9.0 / (8.0 * denom) * a4;
        double nu = -M_LN2 - 0.5 * a2 +
                    (45.0 * M_PI * M_PI + 72.0 * M_LN2 + 36.0 * kEulerGamma - 496.0) /
                        (64.0 * denom) * a4;
        return {mu, nu};
    }
    double mu = 2.1793 + a * (-0.5916 + a * (0.5895 + a * (-0.0909 + a * 0.0053)));
    double nu = -0.8526 + a * (0.3504 + a * (-0.7529 + a * (0.0858 + a * (-0.0045))));
    return {mu, nu};
}

double marcum_q1_approx(double a, double b) {
    if (!(b >= 0.0))
        throw std::domain_error("marcum_q1_approx requires b >= 0");
    MarcumFit fit = marcum_approx_params(a);
    return std::exp(-std::exp(fit.nu) * std::pow(b, fit.mu));
}

} // namespace swipt
