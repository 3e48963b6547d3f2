#pragma once

#include <vector>

#include "swipt/combinatorics.hpp"

namespace swipt::feas {

// One evaluated constraint: condition 1 caps a single user's access
// probability at |S_a|/N; condition 2 caps every group's summed access
// by how often at least one of its members can hold an active rank.
struct ConstraintRecord {
    int condition = 0;
    std::vector<int> users;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct FeasibilityOptions {
    double slack = 1e-12;             // numerical tolerance on each constraint
    double borderline_margin = 1e-9;  // satisfied-but-tight reporting band
    double budget = combi::kDefaultBudget;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<ConstraintRecord> violated;
    std::vector<ConstraintRecord> borderline;
};

// Whether access probabilities p (summing to 1) are achievable by a
// scheduler that serves only users whose rank falls in an active set of
// the given size.  Checks all group sizes L = sa_size..N over every
// user combination.
FeasibilityReport check_feasibility(const std::vector<double>& p, int sa_size,
                                    const FeasibilityOptions& opts = {});

} // namespace swipt::feas
