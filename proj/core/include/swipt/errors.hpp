#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

// Series or continued fraction failed to meet its convergence criterion,
// or the requested evaluation sits on a pole of the expansion.
class SeriesDivergence : public std::runtime_error {
public:
    explicit SeriesDivergence(const std::string& what) : std::runtime_error(what) {}
};

// Predicted enumeration workload exceeds the configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(double predicted_, double cap_)
        : std::runtime_error("enumeration budget exceeded: predicted " +
                             std::to_string(predicted_) + " tuples, cap " +
                             std::to_string(cap_)),
          predicted(predicted_), cap(cap_) {}
    double predicted;
    double cap;
};

// Order-based closed forms require every user to share one fading family
// (and one shape parameter); mixed populations have no tabulated form.
class MixedFamilies : public std::invalid_argument {
public:
    explicit MixedFamilies(const std::string& what) : std::invalid_argument(what) {}
};

// Adaptive quadrature stopped before reaching the requested tolerance.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(double achieved_, double requested_)
        : std::runtime_error("quadrature did not converge: achieved error estimate " +
                             std::to_string(achieved_) + ", requested " +
                             std::to_string(requested_)),
          achieved(achieved_), requested(requested_) {}
    double achieved;
    double requested;
};

} // namespace swipt
