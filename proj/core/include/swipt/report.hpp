#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swipt {

// One CSV output line; NaN metric slots print as empty cells.
struct ResultRow {
    std::string scheme;
    std::string selector;   // "j=2", "sa=1,2", "" for rr/conv_et
    int user = 0;           // 1-based
    double cf_rate, cf_energy;
    double oracle_rate, oracle_energy;
    double sim_rate, sim_rate_se, sim_energy, sim_energy_se;
    double sched_freq;
    std::string feasible;   // "yes"/"no" for budget-splitting rows, else empty

    ResultRow();
};

extern const char* const kCsvHeader;

// Shortest-round-trip style formatting, stable across runs.
std::string format_double(double v);

void write_csv(const std::string& path, const std::vector<ResultRow>& rows);

struct MetaInfo {
    std::string verb;
    std::string scenario_path;
    std::string scenario_hash;  // FNV-1a of the scenario bytes, hex
    std::uint64_t seed = 0;
    std::uint64_t slots = 0;
    double budget = 0.0;
    bool oracle = false;
    std::string axis;           // sweep only
    std::string version;
};

// JSON sidecar describing how the CSV was produced.
void write_meta_json(const std::string& path, const MetaInfo& meta);

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

} // namespace swipt
