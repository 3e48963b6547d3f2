// Command-line front end: evaluate the scheduling expressions for a
// scenario file, cross-check them against the quadrature oracle, run the
// slot simulator, sweep structured parameter axes, and check whether an
// equal-throughput split is achievable.  Outputs are byte-stable: rerunning
// a verb on the same inputs reproduces the CSV and sidecar exactly.
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "swipt/closed_form.hpp"
#include "swipt/errors.hpp"
#include "swipt/feasibility.hpp"
#include "swipt/oracle.hpp"
#include "swipt/report.hpp"
#include "swipt/scenario.hpp"
#include "swipt/sched_sim.hpp"

using namespace swipt;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string scenario_path;
    std::string out_path;
    std::uint64_t seed = 0;
    std::uint64_t slots = 0;
    bool oracle = false;
    double budget = combi::kDefaultBudget;
    std::string axis;
    std::vector<int> values;
    unsigned threads = 0;
};

std::string join_ranks(const std::vector<int>& ranks) {
    std::string out;
    for (size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ranks[i]);
    }
    return out;
}

std::string selector_of(const sim::Policy& p) {
    switch (p.kind) {
        case sim::PolicyKind::OrderSnr:
        case sim::PolicyKind::OrderNsnr: return "j=" + std::to_string(p.order_j);
        case sim::PolicyKind::OrderEt: {
            // '+' keeps the CSV selector field free of commas.
            std::string out = "sa=";
            for (size_t i = 0; i < p.s_a.size(); ++i) {
                if (i) out += '+';
                out += std::to_string(p.s_a[i]);
            }
            return out;
        }
        default: return "";
    }
}

// One evaluation unit: a policy against a concrete system.  Sweeps build
// many of these and a worker pool runs them; assembly stays in cell order
// so the output bytes do not depend on scheduling.
struct Cell {
    sim::Policy policy;
    SystemParams sys;
    std::string selector_suffix;
};

std::vector<ResultRow> evaluate_cell(const Cell& cell, double budget, bool want_oracle) {
    const SystemParams& sys = cell.sys;
    const sim::Policy& pol = cell.policy;
    int n_users = sys.user_count();
    std::vector<ResultRow> rows(static_cast<size_t>(n_users));
    std::string selector = selector_of(pol);
    if (!cell.selector_suffix.empty())
        selector = selector.empty() ? cell.selector_suffix
                                    : selector + " " + cell.selector_suffix;
    for (int n = 1; n <= n_users; ++n) {
        ResultRow& row = rows[static_cast<size_t>(n) - 1];
        row.scheme = sim::policy_label(pol);
        row.selector = selector;
        row.user = n;
    }

    bool fit = sys.users[0].family == Family::Ricean;
    switch (pol.kind) {
        case sim::PolicyKind::RoundRobin: {
            std::vector<UserMetrics> m = cf::rr_metrics(sys);
            for (int n = 1; n <= n_users; ++n) {
                ResultRow& row = rows[static_cast<size_t>(n) - 1];
                row.cf_rate = m[static_cast<size_t>(n) - 1].rate;
                row.cf_energy = m[static_cast<size_t>(n) - 1].energy;
                row.sched_freq = 1.0 / n_users;
                if (want_oracle)
                    row.oracle_rate = oracle::fulltime_rate(sys, n) / n_users;
            }
            break;
        }
        case sim::PolicyKind::ConvEt: {
            EtResult et = cf::conv_et(sys);
            EtResult oet;
            if (want_oracle) oet = oracle::conv_et(sys);
            for (int n = 1; n <= n_users; ++n) {
                ResultRow& row = rows[static_cast<size_t>(n) - 1];
                row.cf_rate = et.throughput;
                row.cf_energy = et.energy[static_cast<size_t>(n) - 1];
                row.sched_freq = et.access[static_cast<size_t>(n) - 1];
                if (want_oracle) {
                    row.oracle_rate = oet.throughput;
                    row.oracle_energy = oet.energy[static_cast<size_t>(n) - 1];
                }
            }
            break;
        }
        case sim::PolicyKind::OrderSnr: {
            for (int n = 1; n <= n_users; ++n) {
                ResultRow& row = rows[static_cast<size_t>(n) - 1];
                row.cf_rate = cf::order_snr_rate(sys, pol.order_j, n, budget);
                row.cf_energy = cf::order_snr_energy(sys, pol.order_j, n, budget);
                // Per-user access of this rule has no tabulated form; the
                // oracle fills it on request.
                if (want_oracle) {
                    row.oracle_rate =
                        oracle::order_snr_rate(sys, pol.order_j, n, {}, fit, budget);
                    row.oracle_energy =
                        oracle::order_snr_energy(sys, pol.order_j, n, {}, fit, budget);
                    row.sched_freq =
                        oracle::order_snr_access(sys, pol.order_j, n, {}, fit, budget);
                }
            }
            break;
        }
        case sim::PolicyKind::OrderNsnr: {
            for (int n = 1; n <= n_users; ++n) {
                ResultRow& row = rows[static_cast<size_t>(n) - 1];
                row.cf_rate = cf::order_nsnr_rate(sys, pol.order_j, n, budget);
                row.cf_energy = cf::order_nsnr_energy(sys, pol.order_j, n, budget);
                row.sched_freq = 1.0 / n_users;  // normalized ranks are iid
                if (want_oracle) {
                    row.oracle_rate = oracle::order_nsnr_rate(sys, pol.order_j, n, {}, fit);
                    row.oracle_energy =
                        oracle::order_nsnr_energy(sys, pol.order_j, n, {}, fit);
                }
            }
            break;
        }
        case sim::PolicyKind::OrderEt: {
            EtResult et = cf::order_et(sys, pol.s_a, budget);
            EtResult oet;
            if (want_oracle) oet = oracle::order_et(sys, pol.s_a, {}, fit);
            feas::FeasibilityOptions fopts;
            fopts.budget = budget;
            feas::FeasibilityReport rep =
                feas::check_feasibility(et.access, static_cast<int>(pol.s_a.size()), fopts);
            for (int n = 1; n <= n_users; ++n) {
                ResultRow& row = rows[static_cast<size_t>(n) - 1];
                row.cf_rate = et.throughput;
                row.cf_energy = et.energy[static_cast<size_t>(n) - 1];
                row.sched_freq = et.access[static_cast<size_t>(n) - 1];
                row.feasible = rep.feasible ? "yes" : "no";
                if (want_oracle) {
                    row.oracle_rate = oet.throughput;
                    row.oracle_energy = oet.energy[static_cast<size_t>(n) - 1];
                }
            }
            break;
        }
    }
    return rows;
}

std::vector<ResultRow> run_cells(const std::vector<Cell>& cells, double budget,
                                 bool want_oracle, unsigned threads) {
    std::vector<std::vector<ResultRow>> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                results[i] = evaluate_cell(cells[i], budget, want_oracle);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
    std::vector<ResultRow> rows;
    for (std::vector<ResultRow>& part : results)
        rows.insert(rows.end(), part.begin(), part.end());
    return rows;
}

void write_outputs(const Options& opt, const Scenario& sc, const char* verb,
                   std::uint64_t slots_used, std::uint64_t seed_used,
                   const std::string& axis, const std::vector<ResultRow>& rows) {
    write_csv(opt.out_path, rows);
    MetaInfo meta;
    meta.verb = verb;
    meta.scenario_path = opt.scenario_path;
    meta.scenario_hash = fnv1a64_hex(sc.text);
    meta.seed = seed_used;
    meta.slots = slots_used;
    meta.budget = opt.budget;
    meta.oracle = opt.oracle;
    meta.axis = axis;
    meta.version = kVersion;
    write_meta_json(opt.out_path + ".meta.json", meta);
    std::printf("wrote %zu rows to %s (+ .meta.json)\n", rows.size(),
                opt.out_path.c_str());
}

int run_analyze(const Options& opt) {
    Scenario sc = parse_scenario_file(opt.scenario_path);
    SystemParams sys = sc.to_system();
    std::vector<Cell> cells;
    for (const sim::Policy& pol : sc.policies) cells.push_back({pol, sys, ""});
    std::vector<ResultRow> rows = run_cells(cells, opt.budget, opt.oracle, 1);
    write_outputs(opt, sc, "analyze", 0, 0, "", rows);
    return 0;
}

int run_simulate(const Options& opt, bool seed_given, bool slots_given) {
    Scenario sc = parse_scenario_file(opt.scenario_path);
    SystemParams sys = sc.to_system();
    std::uint64_t slots = slots_given ? opt.slots : sc.slots;
    std::uint64_t seed = seed_given ? opt.seed : sc.seed;
    std::vector<ResultRow> rows;
    for (const sim::Policy& pol : sc.policies) {
        Cell cell{pol, sys, ""};
        std::vector<ResultRow> policy_rows = evaluate_cell(cell, opt.budget, opt.oracle);
        sim::SimResult res = sim::simulate(sys, pol, slots, seed);
        for (int n = 0; n < sys.user_count(); ++n) {
            const sim::UserSimStats& u = res.users[static_cast<size_t>(n)];
            ResultRow& row = policy_rows[static_cast<size_t>(n)];
            row.sim_rate = u.rate;
            row.sim_rate_se = u.rate_se;
            row.sim_energy = u.energy;
            row.sim_energy_se = u.energy_se;
            row.sched_freq = u.sched_freq;  // observed, replacing the model value
        }
        rows.insert(rows.end(), policy_rows.begin(), policy_rows.end());
    }
    write_outputs(opt, sc, "simulate", slots, seed, "", rows);
    return 0;
}

int run_sweep(const Options& opt) {
    Scenario sc = parse_scenario_file(opt.scenario_path);
    SystemParams sys = sc.to_system();
    int n_users = sys.user_count();
    std::vector<Cell> cells;

    if (opt.axis == "order_j") {
        if (!opt.values.empty())
            throw std::invalid_argument("--values only applies to the user_count axis");
        int swept = 0;
        for (const sim::Policy& pol : sc.policies) {
            if (pol.kind != sim::PolicyKind::OrderSnr &&
                pol.kind != sim::PolicyKind::OrderNsnr)
                continue;
            ++swept;
            for (int j = 1; j <= n_users; ++j) {
                sim::Policy varied = pol;
                varied.order_j = j;
                cells.push_back({varied, sys, ""});
            }
        }
        if (swept == 0)
            throw std::invalid_argument(
                "order_j sweep needs an order_snr or order_nsnr policy in the scenario");
    } else if (opt.axis == "s_a_catalog") {
        if (!opt.values.empty())
            throw std::invalid_argument("--values only applies to the user_count axis");
        if (n_users > 10)
            throw std::invalid_argument(
                "s_a_catalog sweep is capped at 10 users (the catalog doubles per user)");
        bool have_order_et = false;
        for (const sim::Policy& pol : sc.policies)
            if (pol.kind == sim::PolicyKind::OrderEt) have_order_et = true;
        if (!have_order_et)
            throw std::invalid_argument(
                "s_a_catalog sweep needs an order_et policy in the scenario");
        for (unsigned mask = 0; mask < (1u << n_users); ++mask) {
            std::vector<int> s_a;
            for (int r = 1; r <= n_users; ++r)
                if (mask & (1u << (r - 1))) s_a.push_back(r);
            if (s_a.size() < 2) continue;
            cells.push_back({sim::Policy::order_et(std::move(s_a)), sys, ""});
        }
    } else if (opt.axis == "user_count") {
        if (opt.values.empty())
            throw std::invalid_argument(
                "user_count sweep needs --values with the population sizes");
        if (!(sc.omega_scale > 0.0))
            throw std::invalid_argument(
                "user_count sweep needs the omega_scale form so the population "
                "can be rebuilt at each size");
        for (int count : opt.values) {
            if (count < 1)
                throw std::invalid_argument("population sizes must be >= 1");
            Scenario varied = sc;
            varied.omegas =
                scaled_omegas(count, sc.omega_scale, sc.omega_normalized);
            SystemParams vsys = varied.to_system();
            std::string suffix = "users=" + std::to_string(count);
            for (const sim::Policy& pol : sc.policies) {
                // Selectors that name ranks outside 1..count cannot apply.
                if ((pol.kind == sim::PolicyKind::OrderSnr ||
                     pol.kind == sim::PolicyKind::OrderNsnr) &&
                    pol.order_j > count)
                    continue;
                if (pol.kind == sim::PolicyKind::OrderEt) {
                    bool fits = static_cast<int>(pol.s_a.size()) <= count;
                    for (int r : pol.s_a)
                        if (r > count) fits = false;
                    if (!fits) continue;
                }
                if (pol.kind == sim::PolicyKind::ConvEt && count < 2) continue;
                cells.push_back({pol, vsys, suffix});
            }
        }
        if (cells.empty())
            throw std::invalid_argument("no scenario policy applies at any requested size");
    } else {
        throw std::invalid_argument("unknown sweep axis '" + opt.axis +
                                    "' (order_j, s_a_catalog, user_count)");
    }

    std::vector<ResultRow> rows = run_cells(cells, opt.budget, opt.oracle, opt.threads);
    std::printf("swept %zu cells on axis %s\n", cells.size(), opt.axis.c_str());
    write_outputs(opt, sc, "sweep", 0, 0, opt.axis, rows);
    return 0;
}

int run_feascheck(const Options& opt) {
    Scenario sc = parse_scenario_file(opt.scenario_path);
    SystemParams sys = sc.to_system();
    int checked = 0;
    for (const sim::Policy& pol : sc.policies) {
        if (pol.kind != sim::PolicyKind::OrderEt) continue;
        ++checked;
        EtResult et = cf::order_et(sys, pol.s_a, opt.budget);
        feas::FeasibilityOptions fopts;
        fopts.budget = opt.budget;
        feas::FeasibilityReport rep =
            feas::check_feasibility(et.access, static_cast<int>(pol.s_a.size()), fopts);
        std::string access;
        for (size_t i = 0; i < et.access.size(); ++i) {
            if (i) access += ", ";
            access += format_double(et.access[i]);
        }
        std::printf("order_et sa=%s: %s  p = {%s}\n", join_ranks(pol.s_a).c_str(),
                    rep.feasible ? "feasible" : "infeasible", access.c_str());
        for (const feas::ConstraintRecord& rec : rep.violated) {
            if (rec.condition == 1) {
                std::printf("  user %d needs access %s but the rank set only admits %s\n",
                            rec.users[0], format_double(rec.lhs).c_str(),
                            format_double(rec.rhs).c_str());
            } else {
                std::printf("  users {%s} need %s together but can hold an active rank "
                            "at most %s of the time\n",
                            join_ranks(rec.users).c_str(), format_double(rec.lhs).c_str(),
                            format_double(rec.rhs).c_str());
            }
        }
    }
    if (checked == 0)
        throw std::invalid_argument("feascheck needs an order_et policy in the scenario");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form scheduling metrics, oracle cross-checks, and a "
                 "slot simulator for harvest-while-idle downlinks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options opt;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "evaluate the closed forms for every policy in a scenario");
    CLI::App* simulate = app.add_subcommand(
        "simulate", "run the slot simulator next to the closed forms");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "evaluate the closed forms along a structured axis");
    CLI::App* feascheck = app.add_subcommand(
        "feascheck", "report whether each equal-throughput split is achievable");

    for (CLI::App* sub : {analyze, simulate, sweep, feascheck}) {
        sub->add_option("--scenario", opt.scenario_path, "scenario file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--budget", opt.budget,
                        "enumeration budget for the order-based expressions");
    }
    for (CLI::App* sub : {analyze, simulate, sweep}) {
        sub->add_option("--out", opt.out_path, "output CSV path")->required();
        sub->add_flag("--oracle", opt.oracle,
                      "add quadrature-oracle columns (slower)");
    }
    CLI::Option* seed_opt =
        simulate->add_option("--seed", opt.seed, "override the scenario seed");
    CLI::Option* slots_opt =
        simulate->add_option("--slots", opt.slots, "override the scenario slot count");
    sweep->add_option("--axis", opt.axis, "order_j | s_a_catalog | user_count")
        ->required();
    sweep->add_option("--values", opt.values,
                      "population sizes for the user_count axis")
        ->delimiter(',');
    sweep->add_option("--threads", opt.threads,
                      "worker threads for sweep cells (default: hardware)");

    try {
        app.parse(argc, argv);
        if (*analyze) return run_analyze(opt);
        if (*simulate)
            return run_simulate(opt, seed_opt->count() > 0, slots_opt->count() > 0);
        if (*sweep) return run_sweep(opt);
        if (*feascheck) return run_feascheck(opt);
        return 2;
    } catch (const CLI::Error& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::fprintf(stderr,
                     "the request implies more enumeration work than the cap allows; "
                     "raise --budget, or shrink the user count or rank set\n");
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
