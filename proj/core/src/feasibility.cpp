#include "swipt/feasibility.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt::feas {

FeasibilityReport check_feasibility(const std::vector<double>& p, int sa_size,
                                    const FeasibilityOptions& opts) {
    int count = static_cast<int>(p.size());
    if (count < 1)
        throw std::invalid_argument("need at least one access probability");
    if (sa_size < 1 || sa_size > count)
        throw std::invalid_argument("active set size out of range");
    double total = 0.0;
    for (double pn : p) {
        if (!(pn >= 0.0))
            throw std::invalid_argument("access probabilities must be >= 0");
        total += pn;
    }
    if (std::fabs(total - 1.0) > 1e-6)
        throw std::invalid_argument("access probabilities must sum to 1");

    double predicted = count;
    for (int len = sa_size; len <= count; ++len)
        predicted += combi::binomial(count, len);
    combi::require_budget(predicted, opts.budget);

    FeasibilityReport report;
    auto classify = [&](const ConstraintRecord& rec) {
        if (rec.lhs > rec.rhs + opts.slack) {
            report.violated.push_back(rec);
        } else if (rec.lhs > rec.rhs - opts.borderline_margin) {
            report.borderline.push_back(rec);
        }
    };

    double cap = static_cast<double>(sa_size) / count;
    for (int n = 1; n <= count; ++n)
        classify({1, {n}, p[static_cast<size_t>(n) - 1], cap});

    // Any group of L users holds an active rank in a slot with
    // probability [C(N-1,|Sa|-1) L + C(L,|Sa|) (1-|Sa|)] / C(N,|Sa|);
    // their total access cannot exceed it.
    double denom = combi::binomial(count, sa_size);
    for (int len = sa_size; len <= count; ++len) {
        double rhs = (combi::binomial(count - 1, sa_size - 1) * len +
                      combi::binomial(len, sa_size) * (1.0 - sa_size)) /
                     denom;
        combi::Combinations groups(count, len);
        groups.for_each([&](const std::vector<int>& g) {
            double lhs = 0.0;
            for (int n : g) lhs += p[static_cast<size_t>(n) - 1];
            classify({2, g, lhs, rhs});
        });
    }

    report.feasible = report.violated.empty();
    return report;
}

} // namespace swipt::feas
