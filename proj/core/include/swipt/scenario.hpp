#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swipt/sched_sim.hpp"
#include "swipt/system.hpp"

namespace swipt {

// Parsed "key = value" scenario description; see docs/scenario-format.md.
struct Scenario {
    Family family = Family::Rayleigh;
    double shape = 1.0;
    std::vector<double> omegas;
    double power_w = 1.0;
    double noise_w = 1.0;
    double eta = 1.0;
    std::vector<sim::Policy> policies;
    std::uint64_t slots = 100000;
    std::uint64_t seed = 1;
    // Inputs kept for sweeps that rebuild the user population.
    double omega_scale = 0.0;      // 0 when omegas were listed explicitly
    bool omega_normalized = false; // divide by mean(1..N) when rebuilding
    std::string text;              // raw scenario bytes, for hashing

    SystemParams to_system() const;
};

Scenario parse_scenario_text(const std::string& text, const std::string& origin);
Scenario parse_scenario_file(const std::string& path);

// Omegas under the scale rule: omega_n = n * scale, optionally divided
// by the mean rank (N+1)/2 so the population average stays at scale.
std::vector<double> scaled_omegas(int user_count, double scale, bool normalized);

// Mean gains from AP-user distances: free-space loss at a 1 m reference,
// then d^{-exponent} beyond it. A convenience; listed omegas are canonical.
std::vector<double> omegas_from_distances(const std::vector<double>& distances_m,
                                          double path_loss_exponent,
                                          double tx_gain_dbi, double rx_gain_dbi,
                                          double carrier_hz);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

} // namespace swipt
