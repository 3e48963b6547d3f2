#pragma once

#include <vector>

#include "swipt/combinatorics.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/specfun.hpp"
#include "swipt/system.hpp"

// Per-user ergodic rate and average harvested power of the five
// scheduling rules, evaluated from the tabulated expressions.  Rayleigh
// rates and every energy expression are exact; Nakagami and Weibull rate
// rows are high-SNR lower bounds, and the Ricean rows inherit the
// exponential cdf fit.  Users must share one family and shape for the
// order-based rules.
namespace swipt::cf {

// E[log2(1 + gamma_bar h_n)] with the channel always assigned to user n
// (1-based).  Closed form for Rayleigh, adaptive quadrature otherwise.
double fulltime_rate(const SystemParams& sys, int n, const QuadratureConfig& qcfg = {});

// Round-robin: every user holds the channel 1/N of the time.
std::vector<UserMetrics> rr_metrics(const SystemParams& sys,
                                    const QuadratureConfig& qcfg = {});

// Equal-throughput time sharing on full-time rates.
EtResult conv_et(const SystemParams& sys, const QuadratureConfig& qcfg = {});

// Schedule the user whose gain holds ascending rank j.
double order_snr_rate(const SystemParams& sys, int j, int n,
                      double budget = combi::kDefaultBudget);
double order_snr_energy(const SystemParams& sys, int j, int n,
                        double budget = combi::kDefaultBudget);

// Exact-SNR companion of the Nakagami rate row.  The expansion it is
// built on has poles at every integer alpha = m + sum(s_t), which an
// integer-m population always hits, so this path raises SeriesDivergence
// there instead of guessing the limit.
double order_snr_rate_exact_nakagami(const SystemParams& sys, int j, int n,
                                     double budget = combi::kDefaultBudget,
                                     const Accuracy& acc = {});

// The two hypergeometric-series pieces behind that companion, exposed at
// term level: integral of ln(1 + gbar x) x^(alpha-1) e^(-zeta x) over
// x >= 0, exact for non-integer alpha, and its high-SNR limit.
double log_gamma_integral_exact(double alpha, double zeta, double gbar,
                                const Accuracy& acc = {});
double log_gamma_integral_high_snr(double alpha, double zeta, double gbar);

// Schedule the user whose normalized gain h/Omega holds ascending rank j.
double order_nsnr_rate(const SystemParams& sys, int j, int n,
                       double budget = combi::kDefaultBudget);
double order_nsnr_energy(const SystemParams& sys, int j, int n,
                         double budget = combi::kDefaultBudget);

// E[X_(j)] of user_count unit-mean gains of the given family/shape.
double order_statistic_mean(const FadingSpec& spec, int user_count, int j,
                            double budget = combi::kDefaultBudget);

// Equal-throughput sharing restricted to slots where a user's normalized
// rank falls inside s_a (|s_a| >= 2, members in 1..N).
EtResult order_et(const SystemParams& sys, const std::vector<int>& s_a,
                  double budget = combi::kDefaultBudget);

} // namespace swipt::cf
