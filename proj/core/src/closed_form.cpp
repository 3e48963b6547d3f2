#include "swipt/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/errors.hpp"

namespace swipt::cf {

namespace {

void require_user(const SystemParams& sys, int n) {
    if (n < 1 || n > sys.user_count())
        throw std::invalid_argument("user index out of range");
}

void require_rank(const SystemParams& sys, int j) {
    if (j < 1 || j > sys.user_count())
        throw std::invalid_argument("order rank out of range");
}

// Shared scale constants of a single-family population.  v holds the
// additive quantity the order expressions sum: lambda for Rayleigh and
// Nakagami, lambda^k for Weibull, beta for Ricean.  se is the tail
// exponent (k, or mu' for Ricean).
struct OrderView {
    Family family;
    int m = 1;
    double se = 0.0;
    std::vector<double> v;
};

OrderView order_view(const SystemParams& sys) {
    validate(sys);
    Family fam = sys.users[0].family;
    double shape = sys.users[0].shape;
    for (const auto& u : sys.users)
        if (u.family != fam || u.shape != shape)
            throw MixedFamilies("order-based expressions require one family and shape");
    OrderView ov;
    ov.family = fam;
    ov.v.reserve(sys.users.size());
    for (const auto& u : sys.users) {
        DerivedScale d = derived_scale(u);
        switch (fam) {
            case Family::Rayleigh:
            case Family::Nakagami: ov.v.push_back(d.lambda); break;
            case Family::Weibull:  ov.v.push_back(std::pow(d.lambda, shape)); break;
            case Family::Ricean:   ov.v.push_back(d.beta); break;
        }
    }
    if (fam == Family::Nakagami) ov.m = static_cast<int>(shape);
    if (fam == Family::Weibull) ov.se = shape;
    if (fam == Family::Ricean) ov.se = derived_scale(sys.users[0]).mu_prime;
    return ov;
}

// Predicted tuple workload for one (j, n) rank evaluation.
double order_snr_workload(int user_count, int j, int inner_base) {
    double total = 0.0;
    for (int r = 0; r < j; ++r)
        total += combi::binomial(user_count - 1, j - 1) * combi::binomial(j - 1, r) *
                 std::pow(static_cast<double>(inner_base), user_count - j + r);
    return total;
}

double nsnr_workload(int user_count, int j, int m) {
    double total = 0.0;
    for (int l = user_count - j; l <= user_count - 1; ++l)
        total += combi::binomial(l + m - 1, m - 1);
    return total;
}

} // namespace

double fulltime_rate(const SystemParams& sys, int n, const QuadratureConfig& qcfg) {
    validate(sys);
    require_user(sys, n);
    const FadingSpec& u = sys.users[static_cast<size_t>(n) - 1];
    if (u.family == Family::Rayleigh)
        return exp_scaled_e1(1.0 / sys.gamma_bar_n(n)) / M_LN2;
    double gbar = sys.gamma_bar();
    double xmax = upper_tail_cutoff([&](double x) { return cdf(u, x); }, u.omega,
                                    qcfg.tail_cut);
    auto integrand = [&](double x) { return std::log1p(gbar * x) * pdf(u, x); };
    return integrate(integrand, 0.0, xmax, qcfg).value / M_LN2;
}

std::vector<UserMetrics> rr_metrics(const SystemParams& sys, const QuadratureConfig& qcfg) {
    validate(sys);
    int count = sys.user_count();
    std::vector<UserMetrics> out(count);
    for (int n = 1; n <= count; ++n) {
        out[n - 1].rate = fulltime_rate(sys, n, qcfg) / count;
        out[n - 1].energy =
            (1.0 - 1.0 / count) * sys.eta * sys.power * sys.users[n - 1].omega;
    }
    return out;
}

EtResult conv_et(const SystemParams& sys, const QuadratureConfig& qcfg) {
    validate(sys);
    int count = sys.user_count();
    std::vector<double> full(count);
    double inv_sum = 0.0;
    for (int n = 1; n <= count; ++n) {
        full[n - 1] = fulltime_rate(sys, n, qcfg);
        inv_sum += 1.0 / full[n - 1];
    }
    EtResult et;
    et.throughput = 1.0 / inv_sum;
    et.access.resize(count);
    et.energy.resize(count);
    for (int n = 1; n <= count; ++n) {
        et.access[n - 1] = et.throughput / full[n - 1];
        et.energy[n - 1] =
            (1.0 - et.access[n - 1]) * sys.eta * sys.power * sys.users[n - 1].omega;
    }
    return et;
}

double order_snr_rate(const SystemParams& sys, int j, int n, double budget) {
    OrderView ov = order_view(sys);
    require_rank(sys, j);
    require_user(sys, n);
    int count = sys.user_count();
    int inner = ov.family == Family::Nakagami ? ov.m : 1;
    combi::require_budget(order_snr_workload(count, j, inner), budget);

    double gbar = sys.gamma_bar();
    double log_gbar = std::log(gbar);
    double vn = ov.v[static_cast<size_t>(n) - 1];
    double acc = 0.0;
    for (int r = 0; r < j; ++r) {
        double sign = (r % 2 == 0) ? 1.0 : -1.0;
        combi::MergedSubsets subsets(count, j, n, r);
        switch (ov.family) {
            case Family::Rayleigh:
                subsets.for_each([&](const std::vector<int>& u) {
                    double zeta = vn;
                    for (int t : u) zeta += ov.v[static_cast<size_t>(t) - 1];
                    acc += sign / zeta * exp_scaled_e1(zeta / gbar);
                });
                break;
            case Family::Weibull:
            case Family::Ricean:
                subsets.for_each([&](const std::vector<int>& u) {
                    double z = vn;
                    for (int t : u) z += ov.v[static_cast<size_t>(t) - 1];
                    acc += sign / z * (log_gbar - (std::log(z) + kEulerGamma) / ov.se);
                });
                break;
            case Family::Nakagami: {
                int m = ov.m;
                subsets.for_each([&](const std::vector<int>& u) {
                    double zeta = vn;
                    for (int t : u) zeta += ov.v[static_cast<size_t>(t) - 1];
                    double log_zeta = std::log(zeta);
                    combi::BoundedTuples powers(static_cast<int>(u.size()), m);
                    powers.for_each([&](const std::vector<int>& s) {
                        int ssum = 0;
                        double logmag = 0.0;
                        for (size_t t = 0; t < s.size(); ++t) {
                            ssum += s[t];
                            logmag += s[t] * std::log(ov.v[static_cast<size_t>(u[t]) - 1]) -
                                      std::lgamma(s[t] + 1.0);
                        }
                        double alpha = m + ssum;
                        logmag += std::lgamma(alpha) - alpha * log_zeta;
                        acc += sign * std::exp(logmag) *
                               (digamma(alpha) + log_gbar - log_zeta);
                    });
                });
                break;
            }
        }
    }
    if (ov.family == Family::Nakagami)
        return std::exp(ov.m * std::log(vn) - std::lgamma(ov.m)) * acc / M_LN2;
    return vn * acc / M_LN2;
}

double order_snr_energy(const SystemParams& sys, int j, int n, double budget) {
    OrderView ov = order_view(sys);
    require_rank(sys, j);
    require_user(sys, n);
    int count = sys.user_count();
    int inner = ov.family == Family::Nakagami ? ov.m : 1;
    combi::require_budget(order_snr_workload(count, j, inner), budget);

    double vn = ov.v[static_cast<size_t>(n) - 1];
    double acc = 0.0;
    for (int r = 0; r < j; ++r) {
        double sign = (r % 2 == 0) ? 1.0 : -1.0;
        combi::MergedSubsets subsets(count, j, n, r);
        switch (ov.family) {
            case Family::Rayleigh:
                subsets.for_each([&](const std::vector<int>& u) {
                    double zeta = vn;
                    for (int t : u) zeta += ov.v[static_cast<size_t>(t) - 1];
                    acc += sign / (zeta * zeta);
                });
                break;
            case Family::Weibull:
            case Family::Ricean:
                subsets.for_each([&](const std::vector<int>& u) {
                    double z = vn;
                    for (int t : u) z += ov.v[static_cast<size_t>(t) - 1];
                    acc += sign * std::pow(z, -(1.0 + 1.0 / ov.se));
                });
                break;
            case Family::Nakagami: {
                int m = ov.m;
                subsets.for_each([&](const std::vector<int>& u) {
                    double zeta = vn;
                    for (int t : u) zeta += ov.v[static_cast<size_t>(t) - 1];
                    double log_zeta = std::log(zeta);
                    combi::BoundedTuples powers(static_cast<int>(u.size()), m);
                    powers.for_each([&](const std::vector<int>& s) {
                        int ssum = 0;
                        double logmag = 0.0;
                        for (size_t t = 0; t < s.size(); ++t) {
                            ssum += s[t];
                            logmag += s[t] * std::log(ov.v[static_cast<size_t>(u[t]) - 1]) -
                                      std::lgamma(s[t] + 1.0);
                        }
                        double alpha = m + ssum;
                        logmag += std::lgamma(alpha + 1.0) - (alpha + 1.0) * log_zeta;
                        acc += sign * std::exp(logmag);
                    });
                });
                break;
            }
        }
    }
    const FadingSpec& spec = sys.users[static_cast<size_t>(n) - 1];
    double harvest_loss;
    switch (ov.family) {
        case Family::Rayleigh:
            harvest_loss = vn * acc;
            break;
        case Family::Weibull:
        case Family::Ricean:
            harvest_loss = vn * std::tgamma(1.0 + 1.0 / ov.se) * acc;
            break;
        case Family::Nakagami:
            harvest_loss = std::exp(ov.m * std::log(vn) - std::lgamma(ov.m)) * acc;
            break;
        default:
            harvest_loss = 0.0;
    }
    return sys.eta * sys.power * (spec.omega - harvest_loss);
}

double log_gamma_integral_high_snr(double alpha, double zeta, double gbar) {
    if (!(alpha > 0.0) || !(zeta > 0.0) || !(gbar > 0.0))
        throw std::domain_error("log_gamma_integral requires positive arguments");
    return std::tgamma(alpha) * std::pow(zeta, -alpha) *
           (digamma(alpha) + std::log(gbar / zeta));
}

double log_gamma_integral_exact(double alpha, double zeta, double gbar,
                                const Accuracy& acc) {
    if (!(alpha > 0.0) || !(zeta > 0.0) || !(gbar > 0.0))
        throw std::domain_error("log_gamma_integral requires positive arguments");
    if (std::fabs(alpha - std::round(alpha)) < 1e-9)
        throw SeriesDivergence(
            "exact rate expansion has a pole at integer alpha = " + std::to_string(alpha));
    double z = zeta / gbar;

    // 1F1(alpha; alpha+1; z) = sum_k alpha/(alpha+k) z^k/k!
    double f11 = 0.0;
    double pow_term = 1.0;
    bool converged = false;
    for (int k = 0; k < acc.max_terms; ++k) {
        double add = alpha / (alpha + k) * pow_term;
        f11 += add;
        if (std::fabs(add) < acc.rel_tol * std::fabs(f11) + acc.abs_tol) {
            converged = true;
            break;
        }
        pow_term *= z / (k + 1);
    }
    if (!converged)
        throw SeriesDivergence("confluent series stalled at z = " + std::to_string(z));

    // 2F2(1,1; 2,2-alpha; z) = sum_k z^k / ((k+1) (2-alpha)_k)
    double f22 = 0.0;
    double term = 1.0;   // z^k / (2-alpha)_k
    converged = false;
    for (int k = 0; k < acc.max_terms; ++k) {
        double add = term / (k + 1);
        f22 += add;
        if (std::fabs(add) < acc.rel_tol * std::fabs(f22) + acc.abs_tol) {
            converged = true;
            break;
        }
        term *= z / (2.0 - alpha + k);
        if (!std::isfinite(term) || std::fabs(term) > 1e120)
            throw SeriesDivergence("2F2 series diverged at z = " + std::to_string(z));
    }
    if (!converged)
        throw SeriesDivergence("2F2 series stalled at z = " + std::to_string(z));

    double head = std::pow(gbar, -alpha) * M_PI / (alpha * std::sin(alpha * M_PI)) * f11;
    double bracket = std::log(z) - digamma(alpha) + z / (1.0 - alpha) * f22;
    return head - std::tgamma(alpha) * std::pow(zeta, -alpha) * bracket;
}

double order_snr_rate_exact_nakagami(const SystemParams& sys, int j, int n, double budget,
                                     const Accuracy& acc) {
    OrderView ov = order_view(sys);
    if (ov.family != Family::Nakagami)
        throw std::invalid_argument("exact-SNR companion applies to Nakagami populations");
    require_rank(sys, j);
    require_user(sys, n);
    int count = sys.user_count();
    combi::require_budget(order_snr_workload(count, j, ov.m), budget);

    double gbar = sys.gamma_bar();
    double vn = ov.v[static_cast<size_t>(n) - 1];
    int m = ov.m;
    double sum = 0.0;
    for (int r = 0; r < j; ++r) {
        double sign = (r % 2 == 0) ? 1.0 : -1.0;
        combi::MergedSubsets subsets(count, j, n, r);
        subsets.for_each([&](const std::vector<int>& u) {
            double zeta = vn;
            for (int t : u) zeta += ov.v[static_cast<size_t>(t) - 1];
            combi::BoundedTuples powers(static_cast<int>(u.size()), m);
            powers.for_each([&](const std::vector<int>& s) {
                int ssum = 0;
                double logmag = 0.0;
                for (size_t t = 0; t < s.size(); ++t) {
                    ssum += s[t];
                    logmag += s[t] * std::log(ov.v[static_cast<size_t>(u[t]) - 1]) -
                              std::lgamma(s[t] + 1.0);
                }
                double alpha = m + ssum;
                sum += sign * std::exp(logmag) *
                       log_gamma_integral_exact(alpha, zeta, gbar, acc);
            });
        });
    }
    return std::exp(m * std::log(vn) - std::lgamma(m)) * sum / M_LN2;
}

double order_nsnr_rate(const SystemParams& sys, int j, int n, double budget) {
    OrderView ov = order_view(sys);
    require_rank(sys, j);
    require_user(sys, n);
    int count = sys.user_count();
    double gbar_n = sys.gamma_bar_n(n);
    double log_gbar_n = std::log(gbar_n);
    double lead = combi::binomial(count - 1, j - 1);

    switch (ov.family) {
        case Family::Rayleigh: {
            double acc = 0.0;
            for (int l = 0; l < j; ++l) {
                double sign = (l % 2 == 0) ? 1.0 : -1.0;
                double c = count - j + l + 1;
                acc += sign * combi::binomial(j - 1, l) / c * exp_scaled_e1(c / gbar_n);
            }
            return lead * acc / M_LN2;
        }
        case Family::Weibull:
        case Family::Ricean: {
            // Unit-mean scale: lambda^k for Weibull, beta for Ricean.
            DerivedScale d = derived_scale(normalized(sys.users[static_cast<size_t>(n) - 1]));
            double vball = ov.family == Family::Weibull
                               ? std::pow(d.lambda, ov.se)
                               : d.beta;
            double acc = 0.0;
            for (int l = 0; l < j; ++l) {
                double sign = (l % 2 == 0) ? 1.0 : -1.0;
                double c = count - j + l + 1;
                acc += sign * combi::binomial(j - 1, l) / c *
                       (log_gbar_n - (std::log(c * vball) + kEulerGamma) / ov.se);
            }
            return lead * acc / M_LN2;
        }
        case Family::Nakagami: {
            int m = ov.m;
            combi::require_budget(nsnr_workload(count, j, m), budget);
            double acc = 0.0;
            for (int l = count - j; l <= count - 1; ++l) {
                double sign = ((l - count + j) % 2 == 0) ? 1.0 : -1.0;
                double outer = combi::binomial(j - 1, count - l - 1);
                double log1pl = std::log1p(static_cast<double>(l));
                combi::FixedSumTuples parts(m, l);
                double inner = 0.0;
                parts.for_each([&](const std::vector<int>& iv) {
                    int q = 0;
                    double logmag = 0.0;
                    for (int s = 0; s < m; ++s) {
                        q += s * iv[s];
                        logmag += -iv[s] * (std::lgamma(s + 1.0) + s * log1pl) -
                                  std::lgamma(iv[s] + 1.0);
                    }
                    inner += std::exp(logmag + std::lgamma(m + static_cast<double>(q))) *
                             (digamma(m + static_cast<double>(q)) + log_gbar_n -
                              std::log(m * (1.0 + l)));
                });
                acc += sign * outer *
                       std::exp(std::lgamma(l + 1.0) - m * log1pl) * inner;
            }
            return lead * acc / (std::tgamma(static_cast<double>(m)) * M_LN2);
        }
    }
    return 0.0;
}

double order_statistic_mean(const FadingSpec& spec, int user_count, int j, double budget) {
    if (user_count < 1)
        throw std::invalid_argument("order_statistic_mean requires user_count >= 1");
    if (j < 1 || j > user_count)
        throw std::invalid_argument("order rank out of range");
    double lead = combi::binomial(user_count - 1, j - 1);
    switch (spec.family) {
        case Family::Rayleigh: {
            double acc = 0.0;
            for (int l = user_count - j + 1; l <= user_count; ++l)
                acc += 1.0 / l;
            return acc;
        }
        case Family::Weibull:
        case Family::Ricean: {
            double se = spec.family == Family::Weibull
                            ? spec.shape
                            : derived_scale(spec).mu_prime;
            double acc = 0.0;
            for (int l = 0; l < j; ++l) {
                double sign = (l % 2 == 0) ? 1.0 : -1.0;
                double c = user_count - j + l + 1;
                acc += sign * combi::binomial(j - 1, l) * std::pow(c, -(1.0 + 1.0 / se));
            }
            return user_count * lead * acc;
        }
        case Family::Nakagami: {
            int m = static_cast<int>(spec.shape);
            combi::require_budget(nsnr_workload(user_count, j, m), budget);
            double acc = 0.0;
            for (int l = user_count - j; l <= user_count - 1; ++l) {
                double sign = ((l - user_count + j) % 2 == 0) ? 1.0 : -1.0;
                double outer = combi::binomial(j - 1, user_count - l - 1);
                double log1pl = std::log1p(static_cast<double>(l));
                combi::FixedSumTuples parts(m, l);
                double inner = 0.0;
                parts.for_each([&](const std::vector<int>& iv) {
                    int q = 0;
                    double logmag = 0.0;
                    for (int s = 0; s < m; ++s) {
                        q += s * iv[s];
                        logmag += -iv[s] * (std::lgamma(s + 1.0) + s * log1pl) -
                                  std::lgamma(iv[s] + 1.0);
                    }
                    inner += std::exp(logmag +
                                      std::lgamma(m + 1.0 + static_cast<double>(q)));
                });
                acc += sign * outer *
                       std::exp(std::lgamma(l + 1.0) - (m + 1.0) * log1pl) * inner;
            }
            return user_count * lead * acc / std::tgamma(m + 1.0);
        }
    }
    return 0.0;
}

double order_nsnr_energy(const SystemParams& sys, int j, int n, double budget) {
    OrderView ov = order_view(sys);
    require_rank(sys, j);
    require_user(sys, n);
    const FadingSpec& spec = sys.users[static_cast<size_t>(n) - 1];
    double mean_j = order_statistic_mean(normalized(spec), sys.user_count(), j, budget);
    return sys.eta * sys.power * spec.omega * (1.0 - mean_j / sys.user_count());
}

EtResult order_et(const SystemParams& sys, const std::vector<int>& s_a, double budget) {
    OrderView ov = order_view(sys);
    int count = sys.user_count();
    if (s_a.size() < 2)
        throw std::invalid_argument("active rank set needs at least two ranks");
    {
        std::vector<bool> seen(static_cast<size_t>(count) + 1, false);
        for (int j : s_a) {
            if (j < 1 || j > count)
                throw std::invalid_argument("active rank out of range");
            if (seen[static_cast<size_t>(j)])
                throw std::invalid_argument("active rank set has duplicates");
            seen[static_cast<size_t>(j)] = true;
        }
    }

    int sa_size = static_cast<int>(s_a.size());
    std::vector<double> rank_sum(count);
    double inv_sum = 0.0;
    for (int n = 1; n <= count; ++n) {
        double s = 0.0;
        for (int j : s_a)
            s += order_nsnr_rate(sys, j, n, budget);
        rank_sum[n - 1] = s;
        inv_sum += 1.0 / s;
    }
    double mean_sum = 0.0;
    for (int j : s_a)
        mean_sum += order_statistic_mean(normalized(sys.users[0]), count, j, budget);

    EtResult et;
    et.throughput = count / (sa_size * inv_sum);
    et.access.resize(count);
    et.energy.resize(count);
    for (int n = 1; n <= count; ++n) {
        et.access[n - 1] = (1.0 / rank_sum[n - 1]) / inv_sum;
        et.energy[n - 1] = sys.eta * sys.power * sys.users[n - 1].omega *
                           (1.0 - et.access[n - 1] / sa_size * mean_sum);
    }
    return et;
}

} // namespace swipt::cf
