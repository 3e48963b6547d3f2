#pragma once

#include <vector>

#include "swipt/errors.hpp"

namespace swipt::combi {

// Cap on predicted tuple counts before an enumeration is allowed to run.
inline constexpr double kDefaultBudget = 1e8;

// Exact for all arguments small enough that the result fits a double's
// integer range, which covers every enumeration this library can afford.
double binomial(int n, int k);

inline void require_budget(double predicted, double cap) {
    if (predicted > cap)
        throw BudgetExceeded(predicted, cap);
}

// Ascending len-element subsets of {1..n}.
class Combinations {
public:
    Combinations(int n, int len);

    double cardinality() const { return binomial(n_, len_); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<int> c(len_);
        for (int i = 0; i < len_; ++i) c[i] = i + 1;
        while (true) {
            fn(static_cast<const std::vector<int>&>(c));
            int i = len_ - 1;
            while (i >= 0 && c[i] == n_ - len_ + 1 + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int t = i + 1; t < len_; ++t) c[t] = c[t - 1] + 1;
        }
    }

private:
    int n_;
    int len_;
};

// Rank-split arrangements of the users other than n: every way to pick
// which j-1 of them sit below the rank-j user, each block listed in
// ascending order, concatenated as (below..., above...).
class RankSplits {
public:
    RankSplits(int user_count, int rank, int excluded);

    double cardinality() const { return binomial(n_ - 1, j_ - 1); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<int> others = others_;
        std::vector<int> tuple(n_ - 1);
        Combinations below(n_ - 1, j_ - 1);
        below.for_each([&](const std::vector<int>& pick) {
            std::vector<char> in_below(n_, 0);
            for (int idx : pick) in_below[idx - 1] = 1;
            int w = 0;
            for (int idx = 1; idx <= n_ - 1; ++idx)
                if (in_below[idx - 1]) tuple[w++] = others[idx - 1];
            for (int idx = 1; idx <= n_ - 1; ++idx)
                if (!in_below[idx - 1]) tuple[w++] = others[idx - 1];
            fn(static_cast<const std::vector<int>&>(tuple), j_ - 1);
        });
    }

private:
    int n_;
    int j_;
    std::vector<int> others_;
};

// Merged index tuples (c_1..c_r, a_1..a_{n-j}): an r-subset of each
// rank-split's below-block glued to that split's above-block.
class MergedSubsets {
public:
    MergedSubsets(int user_count, int rank, int excluded, int subset_size);

    double cardinality() const {
        return binomial(n_ - 1, j_ - 1) * binomial(j_ - 1, r_);
    }

    int tuple_length() const { return n_ - j_ + r_; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        RankSplits splits(n_, j_, excluded_);
        std::vector<int> tuple(tuple_length());
        splits.for_each([&](const std::vector<int>& arr, int below_len) {
            Combinations pick(below_len, r_);
            pick.for_each([&](const std::vector<int>& sel) {
                for (int i = 0; i < r_; ++i) tuple[i] = arr[sel[i] - 1];
                for (int i = below_len; i < n_ - 1; ++i)
                    tuple[r_ + i - below_len] = arr[i];
                fn(static_cast<const std::vector<int>&>(tuple));
            });
        });
    }

private:
    int n_;
    int j_;
    int excluded_;
    int r_;
};

// Odometer over {0..base-1}^len.
class BoundedTuples {
public:
    BoundedTuples(int len, int base);

    double cardinality() const;

    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<int> t(len_, 0);
        while (true) {
            fn(static_cast<const std::vector<int>&>(t));
            int i = len_ - 1;
            while (i >= 0 && t[i] == base_ - 1) t[i--] = 0;
            if (i < 0) break;
            ++t[i];
        }
    }

private:
    int len_;
    int base_;
};

// Nonnegative integer tuples (i_0..i_{len-1}) with sum exactly total.
class FixedSumTuples {
public:
    FixedSumTuples(int len, int total);

    double cardinality() const { return binomial(total_ + len_ - 1, len_ - 1); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        std::vector<int> t(len_, 0);
        descend(t, 0, total_, fn);
    }

private:
    template <class Fn>
    void descend(std::vector<int>& t, int pos, int remaining, Fn&& fn) const {
        if (pos == len_ - 1) {
            t[pos] = remaining;
            fn(static_cast<const std::vector<int>&>(t));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            t[pos] = v;
            descend(t, pos + 1, remaining - v, fn);
        }
    }

    int len_;
    int total_;
};

} // namespace swipt::combi
