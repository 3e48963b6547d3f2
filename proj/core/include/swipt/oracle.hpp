#pragma once

#include <vector>

#include "swipt/combinatorics.hpp"
#include "swipt/quadrature.hpp"
#include "swipt/system.hpp"

// Numerical evaluation of the defining rate/energy integrals, kept
// independent of the tabulated expressions so the two routes can be
// cross-checked.  Ricean uses the exact cdf unless told otherwise.
namespace swipt::oracle {

// P(user n holds ascending gain rank j | h_n = x): sum over rank splits
// of products of the other users' cdfs and survival functions.
double rank_weight(const std::vector<FadingSpec>& users, int j, int n, double x,
                   bool ricean_approx = false, double budget = combi::kDefaultBudget);

// pdf of the rank-j gain of independent, non-identical users.
double orderstat_pdf(const std::vector<FadingSpec>& users, int j, double x,
                     bool ricean_approx = false, double budget = combi::kDefaultBudget);

double fulltime_rate(const SystemParams& sys, int n, const QuadratureConfig& qcfg = {});

double order_snr_rate(const SystemParams& sys, int j, int n,
                      const QuadratureConfig& qcfg = {},
                      bool ricean_approx = false,
                      double budget = combi::kDefaultBudget);
double order_snr_energy(const SystemParams& sys, int j, int n,
                        const QuadratureConfig& qcfg = {},
                        bool ricean_approx = false,
                        double budget = combi::kDefaultBudget);
// Long-run probability that rank j belongs to user n.
double order_snr_access(const SystemParams& sys, int j, int n,
                        const QuadratureConfig& qcfg = {},
                        bool ricean_approx = false,
                        double budget = combi::kDefaultBudget);

double order_nsnr_rate(const SystemParams& sys, int j, int n,
                       const QuadratureConfig& qcfg = {},
                       bool ricean_approx = false);
double order_nsnr_energy(const SystemParams& sys, int j, int n,
                         const QuadratureConfig& qcfg = {},
                         bool ricean_approx = false);

// E[X_(j)] of user_count unit-mean gains, by quadrature.
double order_statistic_mean(const FadingSpec& spec, int user_count, int j,
                            const QuadratureConfig& qcfg = {},
                            bool ricean_approx = false);

// Equal-throughput points built from the quadrature rates.
EtResult conv_et(const SystemParams& sys, const QuadratureConfig& qcfg = {});
EtResult order_et(const SystemParams& sys, const std::vector<int>& s_a,
                  const QuadratureConfig& qcfg = {},
                  bool ricean_approx = false);

} // namespace swipt::oracle
