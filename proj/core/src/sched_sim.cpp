#include "swipt/sched_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swipt/rng.hpp"

namespace swipt::sim {

std::string policy_label(const Policy& p) {
    switch (p.kind) {
        case PolicyKind::RoundRobin: return "rr";
        case PolicyKind::ConvEt: return "conv_et";
        case PolicyKind::OrderSnr: return "order_snr";
        case PolicyKind::OrderNsnr: return "order_nsnr";
        case PolicyKind::OrderEt: return "order_et";
    }
    return "?";
}

namespace {

void validate_policy(const SystemParams& sys, const Policy& policy) {
    int count = sys.user_count();
    switch (policy.kind) {
        case PolicyKind::OrderSnr:
        case PolicyKind::OrderNsnr:
            if (policy.order_j < 1 || policy.order_j > count)
                throw std::invalid_argument("order rank out of range");
            break;
        case PolicyKind::OrderEt: {
            if (policy.s_a.size() < 2)
                throw std::invalid_argument("active rank set needs at least two ranks");
            std::vector<bool> seen(static_cast<size_t>(count) + 1, false);
            for (int j : policy.s_a) {
                if (j < 1 || j > count)
                    throw std::invalid_argument("active rank out of range");
                if (seen[static_cast<size_t>(j)])
                    throw std::invalid_argument("active rank set has duplicates");
                seen[static_cast<size_t>(j)] = true;
            }
            break;
        }
        default:
            break;
    }
}

} // namespace

SimResult simulate(const SystemParams& sys, const Policy& policy, std::uint64_t slots,
                   std::uint64_t seed) {
    validate(sys);
    validate_policy(sys, policy);
    if (slots == 0)
        throw std::invalid_argument("simulation needs at least one slot");

    const int count = sys.user_count();
    const double gbar = sys.gamma_bar();
    const double harvest_gain = sys.eta * sys.power;
    Rng rng(seed);

    std::vector<double> h(count);
    std::vector<double> throughput(count, 0.0);
    std::vector<double> rate_sum(count, 0.0), rate_sq(count, 0.0);
    std::vector<double> energy_sum(count, 0.0), energy_sq(count, 0.0);
    std::vector<std::uint64_t> sched_count(count, 0), eligible_count(count, 0);

    // rank_of[i]: ascending rank (1-based) of user i under the active
    // ordering key; ties resolve toward the lower index.
    std::vector<int> order(count);
    std::vector<int> rank_of(count);

    const bool normalized_key = policy.kind == PolicyKind::OrderNsnr ||
                                policy.kind == PolicyKind::OrderEt;
    std::vector<char> rank_active;
    if (policy.kind == PolicyKind::OrderEt) {
        rank_active.assign(static_cast<size_t>(count) + 1, 0);
        for (int j : policy.s_a) rank_active[static_cast<size_t>(j)] = 1;
    }

    std::vector<double> key(count);
    for (std::uint64_t t = 1; t <= slots; ++t) {
        for (int i = 0; i < count; ++i)
            h[i] = sample(sys.users[static_cast<size_t>(i)], rng);

        int sel = 0;
        switch (policy.kind) {
            case PolicyKind::RoundRobin:
                sel = static_cast<int>((t - 1) % static_cast<std::uint64_t>(count));
                break;
            case PolicyKind::ConvEt: {
                sel = 0;
                for (int i = 1; i < count; ++i)
                    if (throughput[i] < throughput[sel]) sel = i;
                break;
            }
            case PolicyKind::OrderSnr:
            case PolicyKind::OrderNsnr: {
                for (int i = 0; i < count; ++i)
                    key[i] = normalized_key ? h[i] / sys.users[static_cast<size_t>(i)].omega
                                            : h[i];
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int a, int b) {
                    return key[a] < key[b] || (key[a] == key[b] && a < b);
                });
                sel = order[policy.order_j - 1];
                break;
            }
            case PolicyKind::OrderEt: {
                for (int i = 0; i < count; ++i)
                    key[i] = h[i] / sys.users[static_cast<size_t>(i)].omega;
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](int a, int b) {
                    return key[a] < key[b] || (key[a] == key[b] && a < b);
                });
                for (int r = 0; r < count; ++r)
                    rank_of[order[r]] = r + 1;
                sel = -1;
                for (int i = 0; i < count; ++i) {
                    if (!rank_active[static_cast<size_t>(rank_of[i])])
                        continue;
                    ++eligible_count[i];
                    if (sel < 0 || throughput[i] < throughput[sel])
                        sel = i;
                }
                break;
            }
        }

        double c = std::log2(1.0 + gbar * h[sel]);
        rate_sum[sel] += c;
        rate_sq[sel] += c * c;
        ++sched_count[sel];
        double beta = 1.0 / static_cast<double>(t);
        for (int i = 0; i < count; ++i) {
            if (i == sel) {
                throughput[i] += beta * (c - throughput[i]);
            } else {
                throughput[i] -= beta * throughput[i];
                double e = harvest_gain * h[i];
                energy_sum[i] += e;
                energy_sq[i] += e * e;
            }
        }
    }

    SimResult res;
    res.slots = slots;
    res.seed = seed;
    res.final_throughput = throughput;
    res.users.resize(count);
    double ts = static_cast<double>(slots);
    for (int i = 0; i < count; ++i) {
        UserSimStats& u = res.users[i];
        u.rate = rate_sum[i] / ts;
        u.energy = energy_sum[i] / ts;
        u.sched_count = sched_count[i];
        u.eligible_count = eligible_count[i];
        u.sched_freq = static_cast<double>(sched_count[i]) / ts;
        if (slots > 1) {
            double rate_var = (rate_sq[i] - rate_sum[i] * rate_sum[i] / ts) / (ts - 1.0);
            double energy_var =
                (energy_sq[i] - energy_sum[i] * energy_sum[i] / ts) / (ts - 1.0);
            u.rate_se = std::sqrt(std::max(0.0, rate_var) / ts);
            u.energy_se = std::sqrt(std::max(0.0, energy_var) / ts);
        }
    }
    return res;
}

} // namespace swipt::sim
