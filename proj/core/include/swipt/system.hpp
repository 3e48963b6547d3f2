#pragma once

#include <vector>

#include "swipt/fading.hpp"

namespace swipt {

// Downlink with one scheduled information user per slot; everyone else
// harvests.  Slots have unit length, so harvested power and harvested
// energy per slot coincide.
struct SystemParams {
    double power = 1.0;   // transmit power P [W]
    double noise = 1.0;   // receiver noise power sigma^2 [W]
    double eta = 1.0;     // harvester efficiency, in [0, 1]
    std::vector<FadingSpec> users;

    int user_count() const { return static_cast<int>(users.size()); }
    double gamma_bar() const { return power / noise; }
    // Mean SNR of user n (1-based).
    double gamma_bar_n(int n) const {
        return gamma_bar() * users[static_cast<size_t>(n) - 1].omega;
    }
};

void validate(const SystemParams& sys);

struct UserMetrics {
    double rate = 0.0;    // ergodic rate share, bits per slot
    double energy = 0.0;  // average harvested power, watts
};

// Equal-throughput operating point of a scheduling rule.
struct EtResult {
    double throughput = 0.0;       // common per-user rate, bits per slot
    std::vector<double> access;    // long-run scheduling probability p_n
    std::vector<double> energy;    // average harvested power per user
};

} // namespace swipt
