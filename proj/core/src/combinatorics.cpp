#include "swipt/combinatorics.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt::combi {

double binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("binomial requires n, k >= 0");
    if (k > n)
        return 0.0;
    if (k > n - k)
        k = n - k;
    double acc = 1.0;
    for (int i = 1; i <= k; ++i)
        acc = acc * (n - k + i) / i;
    return std::round(acc);
}

Combinations::Combinations(int n, int len) : n_(n), len_(len) {
    if (n < 0 || len < 0 || len > n)
        throw std::invalid_argument("Combinations requires 0 <= len <= n");
}

RankSplits::RankSplits(int user_count, int rank, int excluded)
    : n_(user_count), j_(rank) {
    if (user_count < 1)
        throw std::invalid_argument("RankSplits requires user_count >= 1");
    if (rank < 1 || rank > user_count)
        throw std::invalid_argument("RankSplits rank out of range");
    if (excluded < 1 || excluded > user_count)
        throw std::invalid_argument("RankSplits excluded user out of range");
    others_.reserve(user_count - 1);
    for (int u = 1; u <= user_count; ++u)
        if (u != excluded) others_.push_back(u);
}

MergedSubsets::MergedSubsets(int user_count, int rank, int excluded, int subset_size)
    : n_(user_count), j_(rank), excluded_(excluded), r_(subset_size) {
    RankSplits validate(user_count, rank, excluded);
    if (subset_size < 0 || subset_size > rank - 1)
        throw std::invalid_argument("MergedSubsets subset size out of range");
}

BoundedTuples::BoundedTuples(int len, int base) : len_(len), base_(base) {
    if (len < 0 || base < 1)
        throw std::invalid_argument("BoundedTuples requires len >= 0, base >= 1");
}

double BoundedTuples::cardinality() const {
    return std::pow(static_cast<double>(base_), len_);
}

FixedSumTuples::FixedSumTuples(int len, int total) : len_(len), total_(total) {
    if (len < 1 || total < 0)
        throw std::invalid_argument("FixedSumTuples requires len >= 1, total >= 0");
}

} // namespace swipt::combi
