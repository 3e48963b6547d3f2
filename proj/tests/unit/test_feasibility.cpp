#include <cmath>
#include <vector>

#include "doctest.h"
#include "swipt/errors.hpp"
#include "swipt/feasibility.hpp"

using namespace swipt;
using feas::check_feasibility;
using feas::ConstraintRecord;

TEST_SUITE("feasibility") {

TEST_CASE("uniform access is feasible for every active-set size") {
    for (int count : {2, 4, 6}) {
        std::vector<double> p(static_cast<size_t>(count), 1.0 / count);
        for (int s = 1; s <= count; ++s) {
            auto rep = check_feasibility(p, s);
            CAPTURE(count);
            CAPTURE(s);
            CHECK(rep.feasible);
        }
    }
}

TEST_CASE("a point mass needs the full active set") {
    std::vector<double> p = {1.0, 0.0, 0.0, 0.0};
    for (int s = 1; s <= 3; ++s) {
        auto rep = check_feasibility(p, s);
        CHECK_FALSE(rep.feasible);
        // The single-user cap s/N is the binding constraint.
        bool cap_hit = false;
        for (const ConstraintRecord& r : rep.violated)
            if (r.condition == 1 && r.users == std::vector<int>{1})
                cap_hit = true;
        CHECK(cap_hit);
    }
    CHECK(check_feasibility(p, 4).feasible);
}

TEST_CASE("group bound carries the exact rank-coverage probability") {
    // Overloaded pair against N = 5, |Sa| = 2: the pair can hold an
    // active rank in at most [C(4,1)*2 + C(2,2)*(1-2)] / C(5,2) = 0.7
    // of the slots.
    std::vector<double> p = {0.49, 0.49, 0.01, 0.005, 0.005};
    auto rep = check_feasibility(p, 2);
    CHECK_FALSE(rep.feasible);
    bool pair_hit = false, cap_hit = false;
    for (const ConstraintRecord& r : rep.violated) {
        if (r.condition == 2 && r.users == std::vector<int>{1, 2}) {
            pair_hit = true;
            CHECK(r.lhs == doctest::Approx(0.98).epsilon(1e-12));
            CHECK(r.rhs == doctest::Approx(0.7).epsilon(1e-12));
        }
        if (r.condition == 1 && r.users == std::vector<int>{1}) {
            cap_hit = true;
            CHECK(r.rhs == doctest::Approx(0.4).epsilon(1e-12));
        }
    }
    CHECK(pair_hit);
    CHECK(cap_hit);
}

TEST_CASE("the full group constraint is always exactly tight") {
    std::vector<double> p = {0.25, 0.25, 0.25, 0.25};
    auto rep = check_feasibility(p, 2);
    CHECK(rep.feasible);
    bool full_group = false;
    for (const ConstraintRecord& r : rep.borderline)
        if (r.condition == 2 && r.users.size() == 4) {
            full_group = true;
            CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
        }
    CHECK(full_group);
}

TEST_CASE("borderline band reports satisfied-but-tight constraints") {
    // User 1 sits exactly on the cap s/N = 0.5.
    std::vector<double> p = {0.5, 0.3, 0.1, 0.1};
    auto rep = check_feasibility(p, 2);
    CHECK(rep.feasible);
    bool tight_cap = false;
    for (const ConstraintRecord& r : rep.borderline)
        if (r.condition == 1 && r.users == std::vector<int>{1})
            tight_cap = true;
    CHECK(tight_cap);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(check_feasibility({0.5, 0.6}, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_feasibility({0.5, 0.5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_feasibility({-0.1, 1.1}, 1), std::invalid_argument);
    feas::FeasibilityOptions opts;
    opts.budget = 2.0;
    CHECK_THROWS_AS(check_feasibility({0.25, 0.25, 0.25, 0.25}, 2, opts),
                    BudgetExceeded);
}

} // TEST_SUITE
