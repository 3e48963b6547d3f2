#include "swipt/fading.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/specfun.hpp"

namespace swipt {

const char* family_name(Family f) {
    switch (f) {
        case Family::Rayleigh: return "rayleigh";
        case Family::Nakagami: return "nakagami";
        case Family::Weibull:  return "weibull";
        case Family::Ricean:   return "ricean";
    }
    return "?";
}

namespace {

void require_omega(double omega) {
    if (!(omega > 0.0))
        throw std::invalid_argument("fading mean omega must be > 0");
}

int nakagami_m(const FadingSpec& spec) {
    return static_cast<int>(spec.shape);
}

} // namespace

FadingSpec FadingSpec::rayleigh(double omega) {
    require_omega(omega);
    return {Family::Rayleigh, 1.0, omega};
}

FadingSpec FadingSpec::nakagami(int m, double omega) {
    require_omega(omega);
    if (m < 1)
        throw std::invalid_argument("Nakagami m must be a positive integer");
    return {Family::Nakagami, static_cast<double>(m), omega};
}

FadingSpec FadingSpec::weibull(double k, double omega) {
    require_omega(omega);
    if (!(k > 0.0))
        throw std::invalid_argument("Weibull k must be > 0");
    return {Family::Weibull, k, omega};
}

FadingSpec FadingSpec::ricean(double big_k, double omega) {
    require_omega(omega);
    if (!(big_k >= 0.0))
        throw std::invalid_argument("Ricean K must be >= 0");
    return {Family::Ricean, big_k, omega};
}

DerivedScale derived_scale(const FadingSpec& spec) {
    DerivedScale d;
    switch (spec.family) {
        case Family::Rayleigh:
            d.lambda = 1.0 / spec.omega;
            break;
        case Family::Nakagami:
            d.lambda = spec.shape / spec.omega;
            break;
        case Family::Weibull:
            d.lambda = std::tgamma(1.0 + 1.0 / spec.shape) / spec.omega;
            break;
        case Family::Ricean: {
            MarcumFit fit = marcum_approx_params(std::sqrt(2.0 * spec.shape));
            d.mu_prime = 0.5 * fit.mu;
            d.beta = std::exp(fit.nu) *
                     std::pow(2.0 * (spec.shape + 1.0) / spec.omega, 0.5 * fit.mu);
            break;
        }
    }
    return d;
}

double pdf(const FadingSpec& spec, double x, bool use_ricean_approx) {
    if (!(x >= 0.0))
        throw std::domain_error("gain pdf requires x >= 0");
    if (use_ricean_approx && spec.family == Family::Ricean) {
        DerivedScale d = derived_scale(spec);
        if (x == 0.0)
            return d.mu_prime < 1.0 ? INFINITY : (d.mu_prime == 1.0 ? d.beta : 0.0);
        double xp = std::pow(x, d.mu_prime);
        return d.beta * d.mu_prime * xp / x * std::exp(-d.beta * xp);
    }
    switch (spec.family) {
        case Family::Rayleigh: {
            double lam = 1.0 / spec.omega;
            return lam * std::exp(-lam * x);
        }
        case Family::Nakagami: {
            int m = nakagami_m(spec);
            double lam = spec.shape / spec.omega;
            if (x == 0.0)
                return m == 1 ? lam : 0.0;
            return std::exp(m * std::log(lam) + (m - 1) * std::log(x) - lam * x -
                            std::lgamma(spec.shape));
        }
        case Family::Weibull: {
            double k = spec.shape;
            double lam = std::tgamma(1.0 + 1.0 / k) / spec.omega;
            if (x == 0.0)
                return k < 1.0 ? INFINITY : (k == 1.0 ? lam : 0.0);
            double lx = lam * x;
            return k * lam * std::pow(lx, k - 1.0) * std::exp(-std::pow(lx, k));
        }
        case Family::Ricean: {
            double bk = spec.shape;
            double scale = (bk + 1.0) / spec.omega;
            double arg = 2.0 * std::sqrt(bk * scale * x);
            return scale * std::exp(-bk - scale * x + log_bessel_i0(arg));
        }
    }
    return 0.0;
}

double cdf(const FadingSpec& spec, double x, bool use_ricean_approx) {
    if (!(x >= 0.0))
        throw std::domain_error("gain cdf requires x >= 0");
    switch (spec.family) {
        case Family::Rayleigh:
            return -std::expm1(-x / spec.omega);
        case Family::Nakagami: {
            // 1 - e^{-lam x} sum_{s<m} (lam x)^s / s!
            int m = nakagami_m(spec);
            double lx = spec.shape / spec.omega * x;
            double term = 1.0;
            double sum = 1.0;
            for (int s = 1; s < m; ++s) {
                term *= lx / s;
                sum += term;
            }
            return 1.0 - std::exp(-lx) * sum;
        }
        case Family::Weibull: {
            double lam = std::tgamma(1.0 + 1.0 / spec.shape) / spec.omega;
            return -std::expm1(-std::pow(lam * x, spec.shape));
        }
        case Family::Ricean: {
            if (use_ricean_approx) {
                DerivedScale d = derived_scale(spec);
                return -std::expm1(-d.beta * std::pow(x, d.mu_prime));
            }
            double bk = spec.shape;
            return 1.0 - marcum_q1_exact(std::sqrt(2.0 * bk),
                                         std::sqrt(2.0 * (bk + 1.0) * x / spec.omega));
        }
    }
    return 0.0;
}

double sample(const FadingSpec& spec, Rng& rng) {
    switch (spec.family) {
        case Family::Rayleigh:
            return spec.omega * rng.exponential();
        case Family::Nakagami: {
            int m = nakagami_m(spec);
            double acc = 0.0;
            for (int i = 0; i < m; ++i)
                acc += rng.exponential();
            return spec.omega / spec.shape * acc;
        }
        case Family::Weibull: {
            double lam = std::tgamma(1.0 + 1.0 / spec.shape) / spec.omega;
            return std::pow(rng.exponential(), 1.0 / spec.shape) / lam;
        }
        case Family::Ricean: {
            // |complex Gaussian|^2: line-of-sight mean on the real axis,
            // per-component variance omega / (2(K+1)).
            double bk = spec.shape;
            double mean = std::sqrt(bk * spec.omega / (bk + 1.0));
            double sd = std::sqrt(spec.omega / (2.0 * (bk + 1.0)));
            double z0, z1;
            rng.normal_pair(z0, z1);
            double re = mean + sd * z0;
            double im = sd * z1;
            return re * re + im * im;
        }
    }
    return 0.0;
}

FadingSpec normalized(const FadingSpec& spec) {
    FadingSpec unit = spec;
    unit.omega = 1.0;
    return unit;
}

} // namespace swipt
