#include "swipt/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace swipt {

ResultRow::ResultRow()
    : cf_rate(NAN), cf_energy(NAN), oracle_rate(NAN), oracle_energy(NAN),
      sim_rate(NAN), sim_rate_se(NAN), sim_energy(NAN), sim_energy_se(NAN),
      sched_freq(NAN) {}

const char* const kCsvHeader =
    "scheme,selector,user,cf_rate,cf_energy,oracle_rate,oracle_energy,"
    "sim_rate,sim_rate_se,sim_energy,sim_energy_se,sched_freq,feasible";

std::string format_double(double v) {
    if (std::isnan(v))
        return "";
    char buf[40];
    // Shortest decimal form that parses back to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << kCsvHeader << "\n";
    for (const ResultRow& r : rows) {
        out << r.scheme << ',' << r.selector << ',' << r.user << ','
            << format_double(r.cf_rate) << ',' << format_double(r.cf_energy) << ','
            << format_double(r.oracle_rate) << ',' << format_double(r.oracle_energy) << ','
            << format_double(r.sim_rate) << ',' << format_double(r.sim_rate_se) << ','
            << format_double(r.sim_energy) << ',' << format_double(r.sim_energy_se) << ','
            << format_double(r.sched_freq) << ',' << r.feasible << "\n";
    }
}

void write_meta_json(const std::string& path, const MetaInfo& meta) {
    nlohmann::json j;
    j["verb"] = meta.verb;
    j["scenario_path"] = meta.scenario_path;
    j["scenario_fnv1a64"] = meta.scenario_hash;
    j["seed"] = meta.seed;
    j["slots"] = meta.slots;
    j["enum_budget"] = meta.budget;
    j["oracle_columns"] = meta.oracle;
    if (!meta.axis.empty())
        j["sweep_axis"] = meta.axis;
    j["tool_version"] = meta.version;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

} // namespace swipt
