#include "swipt/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swipt {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& origin, int line, const std::string& v) {
    size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        fail(origin, line, "expected a number, got '" + v + "'");
    }
    if (pos != v.size())
        fail(origin, line, "trailing junk after number in '" + v + "'");
    return out;
}

std::uint64_t parse_count(const std::string& origin, int line, const std::string& v) {
    double d = parse_number(origin, line, v);
    if (!(d >= 0.0) || d != std::floor(d) || d > 9e15)
        fail(origin, line, "expected a nonnegative integer, got '" + v + "'");
    return static_cast<std::uint64_t>(d);
}

std::vector<double> parse_list(const std::string& origin, int line, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            fail(origin, line, "empty entry in list '" + v + "'");
        out.push_back(parse_number(origin, line, item));
    }
    if (out.empty())
        fail(origin, line, "empty list");
    return out;
}

sim::Policy parse_policy(const std::string& origin, int line, const std::string& v) {
    std::stringstream ss(v);
    std::string kind, arg;
    ss >> kind;
    std::getline(ss, arg);
    arg = trim(arg);
    if (kind == "rr") {
        if (!arg.empty()) fail(origin, line, "rr takes no arguments");
        return sim::Policy::round_robin();
    }
    if (kind == "conv_et") {
        if (!arg.empty()) fail(origin, line, "conv_et takes no arguments");
        return sim::Policy::conv_et();
    }
    if (kind == "order_snr" || kind == "order_nsnr") {
        if (arg.rfind("j=", 0) != 0)
            fail(origin, line, kind + " needs 'j=<rank>'");
        double j = parse_number(origin, line, trim(arg.substr(2)));
        if (j < 1 || j != std::floor(j))
            fail(origin, line, "rank j must be a positive integer");
        return kind == "order_snr" ? sim::Policy::order_snr(static_cast<int>(j))
                                   : sim::Policy::order_nsnr(static_cast<int>(j));
    }
    if (kind == "order_et") {
        if (arg.rfind("sa=", 0) != 0)
            fail(origin, line, "order_et needs 'sa=<rank,rank,...>'");
        std::vector<double> ranks = parse_list(origin, line, trim(arg.substr(3)));
        std::vector<int> s_a;
        for (double r : ranks) {
            if (r < 1 || r != std::floor(r))
                fail(origin, line, "ranks in sa must be positive integers");
            s_a.push_back(static_cast<int>(r));
        }
        return sim::Policy::order_et(std::move(s_a));
    }
    fail(origin, line, "unknown policy '" + kind + "'");
}

} // namespace

std::vector<double> scaled_omegas(int user_count, double scale, bool normalized) {
    if (user_count < 1)
        throw std::invalid_argument("user count must be >= 1");
    if (!(scale > 0.0))
        throw std::invalid_argument("omega scale must be > 0");
    std::vector<double> out(static_cast<size_t>(user_count));
    double mean_rank = 0.5 * (user_count + 1.0);
    for (int n = 1; n <= user_count; ++n)
        out[static_cast<size_t>(n) - 1] = normalized ? n * scale / mean_rank : n * scale;
    return out;
}

std::vector<double> omegas_from_distances(const std::vector<double>& distances_m,
                                          double path_loss_exponent,
                                          double tx_gain_dbi, double rx_gain_dbi,
                                          double carrier_hz) {
    if (!(path_loss_exponent > 0.0))
        throw std::invalid_argument("path loss exponent must be > 0");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier frequency must be > 0");
    double lambda_c = 299792458.0 / carrier_hz;
    double gains = std::pow(10.0, (tx_gain_dbi + rx_gain_dbi) / 10.0);
    double ref = gains * std::pow(lambda_c / (4.0 * M_PI), 2.0);
    std::vector<double> out;
    out.reserve(distances_m.size());
    for (double d : distances_m) {
        if (!(d > 0.0))
            throw std::invalid_argument("distances must be > 0");
        out.push_back(ref * std::pow(d, -path_loss_exponent));
    }
    return out;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
    if (!(watts > 0.0))
        throw std::invalid_argument("power must be > 0 to express in dBm");
    return 10.0 * std::log10(watts) + 30.0;
}

SystemParams Scenario::to_system() const {
    SystemParams sys;
    sys.power = power_w;
    sys.noise = noise_w;
    sys.eta = eta;
    sys.users.reserve(omegas.size());
    for (double om : omegas) {
        switch (family) {
            case Family::Rayleigh: sys.users.push_back(FadingSpec::rayleigh(om)); break;
            case Family::Nakagami:
                sys.users.push_back(FadingSpec::nakagami(static_cast<int>(shape), om));
                break;
            case Family::Weibull: sys.users.push_back(FadingSpec::weibull(shape, om)); break;
            case Family::Ricean: sys.users.push_back(FadingSpec::ricean(shape, om)); break;
        }
    }
    validate(sys);
    return sys;
}

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    Scenario sc;
    sc.text = text;

    bool have_family = false, have_shape = false, have_noise = false;
    bool have_users = false, have_omega = false, have_scale = false;
    bool have_distance = false;
    std::uint64_t users = 0;
    std::string rule = "linear";
    std::vector<double> distances;
    double pl_exponent = 2.76, tx_gain = 10.0, rx_gain = 2.0, carrier = 915e6;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<std::string> seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            fail(origin, line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            fail(origin, line, "expected 'key = value'");

        if (key != "policy") {
            for (const auto& k : seen)
                if (k == key) fail(origin, line, "duplicate key '" + key + "'");
            seen.push_back(key);
        }

        if (key == "family") {
            have_family = true;
            if (value == "rayleigh") sc.family = Family::Rayleigh;
            else if (value == "nakagami") sc.family = Family::Nakagami;
            else if (value == "weibull") sc.family = Family::Weibull;
            else if (value == "ricean") sc.family = Family::Ricean;
            else fail(origin, line, "unknown family '" + value + "'");
        } else if (key == "shape") {
            have_shape = true;
            sc.shape = parse_number(origin, line, value);
        } else if (key == "power_w") {
            sc.power_w = parse_number(origin, line, value);
        } else if (key == "noise_w") {
            if (have_noise) fail(origin, line, "noise given twice");
            have_noise = true;
            sc.noise_w = parse_number(origin, line, value);
        } else if (key == "noise_dbm") {
            if (have_noise) fail(origin, line, "noise given twice");
            have_noise = true;
            sc.noise_w = dbm_to_watts(parse_number(origin, line, value));
        } else if (key == "eta") {
            sc.eta = parse_number(origin, line, value);
        } else if (key == "users") {
            have_users = true;
            users = parse_count(origin, line, value);
            if (users < 1) fail(origin, line, "users must be >= 1");
        } else if (key == "omega") {
            have_omega = true;
            sc.omegas = parse_list(origin, line, value);
        } else if (key == "omega_scale") {
            have_scale = true;
            sc.omega_scale = parse_number(origin, line, value);
        } else if (key == "omega_rule") {
            if (value == "linear") rule = "linear";
            else if (value == "normalized") rule = "normalized";
            else fail(origin, line, "omega_rule must be linear or normalized");
        } else if (key == "distance_m") {
            have_distance = true;
            distances = parse_list(origin, line, value);
        } else if (key == "path_loss_exponent") {
            pl_exponent = parse_number(origin, line, value);
        } else if (key == "tx_gain_dbi") {
            tx_gain = parse_number(origin, line, value);
        } else if (key == "rx_gain_dbi") {
            rx_gain = parse_number(origin, line, value);
        } else if (key == "carrier_hz") {
            carrier = parse_number(origin, line, value);
        } else if (key == "policy") {
            sc.policies.push_back(parse_policy(origin, line, value));
        } else if (key == "slots") {
            sc.slots = parse_count(origin, line, value);
            if (sc.slots < 1) fail(origin, line, "slots must be >= 1");
        } else if (key == "seed") {
            sc.seed = parse_count(origin, line, value);
        } else {
            fail(origin, line, "unknown key '" + key + "'");
        }
    }

    if (!have_family)
        fail(origin, line, "missing 'family'");
    if (sc.family != Family::Rayleigh && !have_shape)
        fail(origin, line, "missing 'shape' for non-Rayleigh family");
    if (!have_noise)
        fail(origin, line, "missing 'noise_w' or 'noise_dbm'");
    sc.omega_normalized = rule == "normalized";
    if ((have_omega ? 1 : 0) + (have_scale ? 1 : 0) + (have_distance ? 1 : 0) > 1)
        fail(origin, line, "give either 'omega' or 'omega_scale' or 'distance_m', not both");
    if (have_omega) {
        if (have_users && users != sc.omegas.size())
            fail(origin, line, "'users' disagrees with length of 'omega'");
    } else if (have_distance) {
        if (have_users && users != distances.size())
            fail(origin, line, "'users' disagrees with length of 'distance_m'");
        try {
            sc.omegas = omegas_from_distances(distances, pl_exponent, tx_gain, rx_gain, carrier);
        } catch (const std::invalid_argument& e) {
            fail(origin, line, e.what());
        }
    } else {
        if (!have_users || !have_scale)
            fail(origin, line, "need 'omega' or both 'users' and 'omega_scale'");
        sc.omegas =
            scaled_omegas(static_cast<int>(users), sc.omega_scale, sc.omega_normalized);
    }
    if (sc.policies.empty())
        fail(origin, line, "need at least one 'policy'");
    int n = static_cast<int>(sc.omegas.size());
    for (const sim::Policy& p : sc.policies) {
        if ((p.kind == sim::PolicyKind::OrderSnr || p.kind == sim::PolicyKind::OrderNsnr) &&
            p.order_j > n)
            fail(origin, line, "rank j exceeds the user count");
        if (p.kind == sim::PolicyKind::OrderEt) {
            if (p.s_a.size() < 2)
                fail(origin, line, "order_et needs at least two ranks in sa");
            std::vector<char> hit(static_cast<size_t>(n) + 1, 0);
            for (int r : p.s_a) {
                if (r > n) fail(origin, line, "rank in sa exceeds the user count");
                if (hit[static_cast<size_t>(r)]++)
                    fail(origin, line, "duplicate rank in sa");
            }
        }
    }
    sc.to_system();  // surface value errors at parse time
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

} // namespace swipt
