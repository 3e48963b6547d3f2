#include "swipt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

// Kronrod 15-point nodes on [0, 1] side; odd indices are the embedded
// Gauss 7-point nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

Panel evaluate_panel(const std::function<double(double)>& fn, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = fn(mid);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        double dx = half * kXgk[i];
        double fsum = fn(mid - dx) + fn(mid + dx);
        kron += fsum * kWgk[i];
        if (i % 2 == 1)
            gauss += fsum * kWg[i / 2];
    }
    gauss *= half;
    kron *= half;
    return {a, b, kron, std::fabs(kron - gauss)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be > 0");
    if (!(b >= a))
        throw std::invalid_argument("quadrature requires b >= a");
    if (a == b)
        return {0.0, 0.0, 0};

    auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
    std::vector<Panel> heap;
    heap.push_back(evaluate_panel(fn, a, b));

    double value = heap[0].value;
    double error = heap[0].error;
    int splits = 0;
    while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value))) {
        if (splits >= cfg.max_subdivisions)
            throw QuadratureFailure(error, std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value)));
        std::pop_heap(heap.begin(), heap.end(), worse);
        Panel worst = heap.back();
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b))
            throw QuadratureFailure(error, std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value)));
        Panel left = evaluate_panel(fn, worst.a, mid);
        Panel right = evaluate_panel(fn, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
        ++splits;
    }
    return {value, error, static_cast<int>(heap.size())};
}

double upper_tail_cutoff(const std::function<double(double)>& cdf_fn, double scale,
                         double tail_cut) {
    if (!(tail_cut > 0.0) || tail_cut > 1e-6)
        throw std::invalid_argument("tail_cut must lie in (0, 1e-6]");
    if (!(scale > 0.0))
        throw std::invalid_argument("tail search scale must be > 0");
    double x = scale;
    for (int i = 0; i < 300; ++i) {
        if (1.0 - cdf_fn(x) < tail_cut)
            return x;
        x *= 2.0;
    }
    throw QuadratureFailure(1.0 - cdf_fn(x), tail_cut);
}

} // namespace swipt
