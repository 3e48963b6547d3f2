#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swipt/system.hpp"

namespace swipt::sim {

enum class PolicyKind { RoundRobin, ConvEt, OrderSnr, OrderNsnr, OrderEt };

struct Policy {
    PolicyKind kind = PolicyKind::RoundRobin;
    int order_j = 1;          // OrderSnr / OrderNsnr rank
    std::vector<int> s_a;     // OrderEt active rank set

    static Policy round_robin() { return {PolicyKind::RoundRobin, 1, {}}; }
    static Policy conv_et() { return {PolicyKind::ConvEt, 1, {}}; }
    static Policy order_snr(int j) { return {PolicyKind::OrderSnr, j, {}}; }
    static Policy order_nsnr(int j) { return {PolicyKind::OrderNsnr, j, {}}; }
    static Policy order_et(std::vector<int> s_a) {
        return {PolicyKind::OrderEt, 1, std::move(s_a)};
    }
};

std::string policy_label(const Policy& p);

struct UserSimStats {
    double rate = 0.0;        // time-average delivered bits per slot
    double rate_se = 0.0;     // standard error of that average
    double energy = 0.0;      // time-average harvested power
    double energy_se = 0.0;
    double sched_freq = 0.0;  // fraction of slots scheduled
    std::uint64_t sched_count = 0;
    std::uint64_t eligible_count = 0;  // OrderEt: slots with rank inside s_a
};

struct SimResult {
    std::vector<UserSimStats> users;
    std::vector<double> final_throughput;  // running-mean throughput r_n(T)
    std::uint64_t slots = 0;
    std::uint64_t seed = 0;
};

// Unit-length slots: one user decodes, the rest harvest eta * P * h.
// Scheduling state r_n(t) is the running mean of delivered rate
// (r_n(0) = 0, beta_t = 1/t); throughput-based rules break ties toward
// the lowest user index.
SimResult simulate(const SystemParams& sys, const Policy& policy, std::uint64_t slots,
                   std::uint64_t seed);

} // namespace swipt::sim
