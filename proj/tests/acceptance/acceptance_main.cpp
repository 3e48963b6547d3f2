// End-to-end acceptance gate: one pass/fail line per criterion, with the
// tolerances pinned here in code.  Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "swipt/closed_form.hpp"
#include "swipt/fading.hpp"
#include "swipt/feasibility.hpp"
#include "swipt/oracle.hpp"
#include "swipt/rng.hpp"
#include "swipt/scenario.hpp"
#include "swipt/sched_sim.hpp"

#include "reference_systems.hpp"

using namespace swipt;
using testsupport::make_user;
using testsupport::reference_noise_w;
using testsupport::seven_user_system;
using testsupport::small_system;
using testsupport::strong_weak_pair_system;

namespace {

// Pinned gates.  Times are wall-clock ceilings in seconds.
constexpr double kSplitTolerance = 0.0005;        // access probability gate
constexpr double kSplitTimeLimit = 1.0;
constexpr double kSimRelTolerance = 0.005;        // long-run rate gate
constexpr double kSimTimeLimit = 30.0;
constexpr double kSwapTolerancePp = 0.5;          // percentage points
constexpr double kSwapTimeLimit = 120.0;
constexpr double kLosSwapTolerancePp = 1.0;
constexpr double kLosSwapTimeLimit = 60.0;
constexpr double kEnergyOracleGate = 1e-6;        // cf vs oracle, energies
constexpr double kExactRateOracleGate = 1e-6;     // exact rate routes
constexpr double kFitRateOracleGate = 5e-6;       // line-of-sight fit routes
constexpr double kBoundRateGate = 1e-3;           // high-SNR rate bounds
constexpr double kFitModelGapGate = 0.01;         // fit vs exact model, K = 6
constexpr double kZScoreGate = 3.0;
constexpr double kMatrixTimeLimit = 300.0;

int failures = 0;
int checks = 0;

void verdict(int criterion, const char* label, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, label);
    if (!ok) ++failures;
}

bool expect(bool ok, const char* what) {
    ++checks;
    if (!ok) std::printf("    FAILED: %s\n", what);
    return ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double pct(double now, double before) { return 100.0 * (now / before - 1.0); }

// Tight quadrature for the cf-vs-oracle gates; the default tail cut
// leaves the Weibull energies too close to the 1e-6 line.
QuadratureConfig tight_quadrature() {
    QuadratureConfig q;
    q.rel_tol = 1e-10;
    q.max_subdivisions = 20000;
    q.tail_cut = 1e-13;
    return q;
}

// --- criterion 1: equal-throughput split on a strong/weak population ---
bool criterion_split() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    const std::vector<double> want_a = {0.0884, 0.0884, 0.4116, 0.4116};
    const std::vector<double> want_b = {0.0603, 0.0603, 0.4397, 0.4397};

    EtResult a = cf::order_et(strong_weak_pair_system(1e-10), {3, 4});
    EtResult b = cf::order_et(strong_weak_pair_system(1e-11), {3, 4});
    double worst = 0.0;
    for (int n = 0; n < 4; ++n) {
        worst = std::fmax(worst, std::fabs(a.access[n] - want_a[n]));
        worst = std::fmax(worst, std::fabs(b.access[n] - want_b[n]));
        ok &= expect(std::fabs(a.access[n] - want_a[n]) <= kSplitTolerance,
                     "strong/weak split, weak gain 1e-10");
        ok &= expect(std::fabs(b.access[n] - want_b[n]) <= kSplitTolerance,
                     "strong/weak split, weak gain 1e-11");
    }
    feas::FeasibilityReport fa = feas::check_feasibility(a.access, 2);
    feas::FeasibilityReport fb = feas::check_feasibility(b.access, 2);
    ok &= expect(fa.feasible, "weak gain 1e-10 split must be achievable");
    ok &= expect(!fb.feasible, "weak gain 1e-11 split must be flagged unachievable");
    bool pair_certificate = false;
    for (const feas::ConstraintRecord& rec : fb.violated)
        if (rec.condition == 2 && rec.users.size() == 2) pair_certificate = true;
    ok &= expect(pair_certificate, "unachievability must come from a two-user group");

    std::printf("    noise %.6g W (%.4f dBm), worst access error %.2g\n",
                reference_noise_w(), watts_to_dbm(reference_noise_w()), worst);

    // The same split under a noise floor of exactly -96 dBm, for reference.
    double flat = dbm_to_watts(-96.0);
    SystemParams sys_flat = strong_weak_pair_system(1e-10);
    sys_flat.noise = flat;
    EtResult af = cf::order_et(sys_flat, {3, 4});
    double flat_err = 0.0;
    for (int n = 0; n < 4; ++n)
        flat_err = std::fmax(flat_err, std::fabs(af.access[n] - want_a[n]));
    std::printf("    flat -96 dBm reading differs from the published split by %.2g "
                "(reported, not gated)\n", flat_err);

    double dt = seconds_since(t0);
    ok &= expect(dt < kSplitTimeLimit, "split evaluation exceeded its time budget");
    std::printf("    elapsed %.3f s (limit %.0f s)\n", dt, kSplitTimeLimit);
    return ok;
}

// --- criterion 2: million-slot rank-set simulation hits the reference rates ---
bool criterion_long_run() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    const std::vector<double> want = {3.5285, 3.5285, 2.415, 2.415};
    sim::SimResult res = sim::simulate(strong_weak_pair_system(1e-11),
                                       sim::Policy::order_et({3, 4}), 1000000, 7);
    for (int n = 0; n < 4; ++n) {
        double e = rel(res.users[n].rate, want[n]);
        std::printf("    user %d rate %.4f vs %.4f (%+.3f%%)\n", n + 1,
                    res.users[n].rate, want[n], 100.0 * (res.users[n].rate / want[n] - 1.0));
        ok &= expect(e <= kSimRelTolerance, "simulated rate off the reference point");
    }

    double dt = seconds_since(t0);
    ok &= expect(dt < kSimTimeLimit, "simulation exceeded its time budget");
    std::printf("    elapsed %.2f s (limit %.0f s)\n", dt, kSimTimeLimit);
    return ok;
}

struct Totals { double rate = 0.0, energy = 0.0; };

Totals snr_totals(const SystemParams& sys, int j) {
    Totals t;
    for (int n = 1; n <= sys.user_count(); ++n) {
        t.rate += cf::order_snr_rate(sys, j, n);
        t.energy += cf::order_snr_energy(sys, j, n);
    }
    return t;
}

Totals nsnr_totals(const SystemParams& sys, int j) {
    Totals t;
    for (int n = 1; n <= sys.user_count(); ++n) {
        t.rate += cf::order_nsnr_rate(sys, j, n);
        t.energy += cf::order_nsnr_energy(sys, j, n);
    }
    return t;
}

bool check_pp(double got, double want, double tol, const char* what) {
    std::printf("    %-34s %+7.2f%%  (expect %+6.2f%%)\n", what, got, want);
    return expect(std::fabs(got - want) <= tol, what);
}

// --- criterion 3: best-to-worst rank swap tradeoffs, shaped fading ---
bool criterion_swap_shaped() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    SystemParams sys = seven_user_system(Family::Nakagami, 3.0);
    Totals sN = snr_totals(sys, 7), s1 = snr_totals(sys, 1);
    ok &= check_pp(pct(s1.energy, sN.energy), 45.98, kSwapTolerancePp,
                   "gain-rank swap: total energy");
    ok &= check_pp(pct(s1.rate, sN.rate), -12.78, kSwapTolerancePp,
                   "gain-rank swap: total rate");
    Totals nN = nsnr_totals(sys, 7), n1 = nsnr_totals(sys, 1);
    ok &= check_pp(pct(n1.energy, nN.energy), 29.45, kSwapTolerancePp,
                   "normalized-rank swap: total energy");
    ok &= check_pp(pct(n1.rate, nN.rate), -8.68, kSwapTolerancePp,
                   "normalized-rank swap: total rate");
    EtResult hi = cf::order_et(sys, {6, 7});
    EtResult lo = cf::order_et(sys, {1, 2});
    double ehi = 0.0, elo = 0.0;
    for (double e : hi.energy) ehi += e;
    for (double e : lo.energy) elo += e;
    ok &= check_pp(pct(elo, ehi), 21.35, kSwapTolerancePp,
                   "rank-set swap: total energy");
    ok &= check_pp(pct(lo.throughput, hi.throughput), -6.78, kSwapTolerancePp,
                   "rank-set swap: common rate");

    double dt = seconds_since(t0);
    ok &= expect(dt < kSwapTimeLimit, "shaped-fading swap exceeded its time budget");
    std::printf("    elapsed %.2f s (limit %.0f s)\n", dt, kSwapTimeLimit);
    return ok;
}

// --- criterion 4: best-to-worst rank swap tradeoffs, line-of-sight fading ---
bool criterion_swap_los() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    SystemParams sys = seven_user_system(Family::Ricean, 6.0);
    double rN = cf::order_nsnr_rate(sys, 7, 7), r1 = cf::order_nsnr_rate(sys, 1, 7);
    double eN = cf::order_nsnr_energy(sys, 7, 7), e1 = cf::order_nsnr_energy(sys, 1, 7);
    ok &= check_pp(pct(r1, rN), -7.94, kLosSwapTolerancePp,
                   "normalized-rank swap: best user rate");
    ok &= check_pp(pct(e1, eN), 26.1, kLosSwapTolerancePp,
                   "normalized-rank swap: best user energy");
    EtResult hi = cf::order_et(sys, {6, 7});
    EtResult lo = cf::order_et(sys, {1, 2});
    ok &= check_pp(pct(lo.energy[6], hi.energy[6]), 18.6, kLosSwapTolerancePp,
                   "rank-set swap: best user energy");
    ok &= check_pp(pct(lo.energy[0], hi.energy[0]), 21.0, kLosSwapTolerancePp,
                   "rank-set swap: worst user energy");
    ok &= check_pp(pct(lo.throughput, hi.throughput), -6.33, kLosSwapTolerancePp,
                   "rank-set swap: common rate");

    double dt = seconds_since(t0);
    ok &= expect(dt < kLosSwapTimeLimit, "line-of-sight swap exceeded its time budget");
    std::printf("    elapsed %.2f s (limit %.0f s)\n", dt, kLosSwapTimeLimit);
    return ok;
}

struct WorstError {
    double err = 0.0;
    std::string what;
    void track(double e, const std::string& w) {
        if (e > err) {
            err = e;
            what = w;
        }
    }
};

// --- criterion 5: closed forms agree with the quadrature oracle ---
bool criterion_oracle_agreement() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    QuadratureConfig q = tight_quadrature();

    struct Pop { Family family; double shape; };
    const std::vector<Pop> pops = {{Family::Rayleigh, 0.0},
                                   {Family::Nakagami, 3.0},
                                   {Family::Weibull, 1.5},
                                   {Family::Ricean, 6.0}};
    for (const Pop& pop : pops) {
        // The fit-model oracle is the gate for the line-of-sight family;
        // its distance to the exact model is judged separately below.
        bool fit = pop.family == Family::Ricean;
        bool exact_rate = pop.family == Family::Rayleigh;
        double rate_gate = fit ? kFitRateOracleGate : kExactRateOracleGate;
        WorstError we, wr, wb;
        double above_oracle = 0.0;
        for (int n_users : {2, 3}) {
            SystemParams sys = small_system(pop.family, pop.shape, n_users);
            std::string tag = std::string(family_name(pop.family)) + " N=" +
                              std::to_string(n_users);
            std::vector<UserMetrics> rrm = cf::rr_metrics(sys, q);
            EtResult cet = cf::conv_et(sys, q);
            EtResult oet = oracle::conv_et(sys, q);
            for (int n = 1; n <= n_users; ++n) {
                wr.track(rel(rrm[static_cast<size_t>(n) - 1].rate,
                             oracle::fulltime_rate(sys, n, q) / n_users),
                         tag + " rr rate");
                we.track(rel(cet.energy[static_cast<size_t>(n) - 1],
                             oet.energy[static_cast<size_t>(n) - 1]),
                         tag + " conv_et energy");
            }
            wr.track(rel(cet.throughput, oet.throughput), tag + " conv_et rate");
            for (int j = 1; j <= n_users; ++j) {
                for (int n = 1; n <= n_users; ++n) {
                    we.track(rel(cf::order_snr_energy(sys, j, n),
                                 oracle::order_snr_energy(sys, j, n, q, fit)),
                             tag + " order_snr energy");
                    we.track(rel(cf::order_nsnr_energy(sys, j, n),
                                 oracle::order_nsnr_energy(sys, j, n, q, fit)),
                             tag + " order_nsnr energy");
                    double cr = cf::order_snr_rate(sys, j, n);
                    double orr = oracle::order_snr_rate(sys, j, n, q, fit);
                    double e = rel(cr, orr);
                    if (exact_rate || fit) wr.track(e, tag + " order_snr rate");
                    else {
                        wb.track(e, tag + " order_snr rate");
                        above_oracle = std::fmax(above_oracle, cr / orr - 1.0);
                    }
                    cr = cf::order_nsnr_rate(sys, j, n);
                    orr = oracle::order_nsnr_rate(sys, j, n, q, fit);
                    e = rel(cr, orr);
                    if (exact_rate || fit) wr.track(e, tag + " order_nsnr rate");
                    else {
                        wb.track(e, tag + " order_nsnr rate");
                        above_oracle = std::fmax(above_oracle, cr / orr - 1.0);
                    }
                }
            }
            std::vector<std::vector<int>> rank_sets;
            if (n_users == 2) rank_sets = {{1, 2}};
            else rank_sets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
            for (const std::vector<int>& sa : rank_sets) {
                EtResult ce = cf::order_et(sys, sa);
                EtResult oe = oracle::order_et(sys, sa, q, fit);
                for (int n = 0; n < n_users; ++n)
                    we.track(rel(ce.energy[static_cast<size_t>(n)],
                                 oe.energy[static_cast<size_t>(n)]),
                             tag + " order_et energy");
                double e = rel(ce.throughput, oe.throughput);
                if (exact_rate || fit) wr.track(e, tag + " order_et rate");
                else {
                    wb.track(e, tag + " order_et rate");
                    above_oracle = std::fmax(above_oracle, ce.throughput / oe.throughput - 1.0);
                }
            }
        }
        std::printf("    [%-8s] worst energy %.2e (%s), worst exact rate %.2e (%s)\n",
                    family_name(pop.family), we.err, we.what.c_str(), wr.err,
                    wr.what.c_str());
        ok &= expect(we.err <= kEnergyOracleGate, "energy row drifted from the oracle");
        ok &= expect(wr.err <= rate_gate, "exact rate row drifted from the oracle");
        if (!exact_rate && !fit) {
            std::printf("    [%-8s] rate bound gap %.2e (%s), above-oracle excess %.2e\n",
                        family_name(pop.family), wb.err, wb.what.c_str(), above_oracle);
            ok &= expect(above_oracle <= 1e-9, "rate bound exceeded the oracle");
            ok &= expect(wb.err <= kBoundRateGate,
                         "high-SNR rate bound looser than 0.1%");
        }
    }

    // Distance between the line-of-sight fit model and the exact one at
    // K = 6, measured on the rules whose rows lean on the fit.
    double worst_fit_gap = 0.0;
    std::string worst_fit_what;
    auto track_gap = [&](double approx, double exact, const std::string& what) {
        double e = rel(approx, exact);
        if (e > worst_fit_gap) {
            worst_fit_gap = e;
            worst_fit_what = what;
        }
    };
    for (int n_users : {2, 3}) {
        SystemParams sys = small_system(Family::Ricean, 6.0, n_users);
        for (int j = 1; j <= n_users; ++j)
            for (int n = 1; n <= n_users; ++n) {
                track_gap(cf::order_nsnr_rate(sys, j, n),
                          oracle::order_nsnr_rate(sys, j, n, {}, false),
                          "order_nsnr rate");
                track_gap(cf::order_nsnr_energy(sys, j, n),
                          oracle::order_nsnr_energy(sys, j, n, {}, false),
                          "order_nsnr energy");
            }
        std::vector<std::vector<int>> rank_sets;
        if (n_users == 2) rank_sets = {{1, 2}};
        else rank_sets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
        for (const std::vector<int>& sa : rank_sets) {
            EtResult ce = cf::order_et(sys, sa);
            EtResult oe = oracle::order_et(sys, sa, {}, false);
            track_gap(ce.throughput, oe.throughput, "order_et rate");
            for (int n = 0; n < n_users; ++n)
                track_gap(ce.energy[static_cast<size_t>(n)],
                          oe.energy[static_cast<size_t>(n)], "order_et energy");
        }
    }
    std::printf("    line-of-sight fit gap at K=6: %.4f%% (%s), gate %.0f%%\n",
                100.0 * worst_fit_gap, worst_fit_what.c_str(), 100.0 * kFitModelGapGate);
    ok &= expect(worst_fit_gap < kFitModelGapGate,
                 "fit model strayed more than 1% from the exact model");

    // The gain-ranked rule leans on the fit where it is weakest; its gap
    // and the raw cdf distance are reported for context, not gated.
    {
        double wr_gap = 0.0, we_gap = 0.0;
        SystemParams sys = small_system(Family::Ricean, 6.0, 3);
        for (int j = 1; j <= 3; ++j)
            for (int n = 1; n <= 3; ++n) {
                wr_gap = std::fmax(wr_gap, rel(cf::order_snr_rate(sys, j, n),
                                               oracle::order_snr_rate(sys, j, n, {}, false)));
                we_gap = std::fmax(we_gap, rel(cf::order_snr_energy(sys, j, n),
                                               oracle::order_snr_energy(sys, j, n, {}, false)));
            }
        FadingSpec ric = FadingSpec::ricean(6.0, 1.0);
        double sup = 0.0;
        for (int i = 1; i <= 4000; ++i) {
            double x = 6.0 * i / 4000.0;
            sup = std::fmax(sup, std::fabs(cdf(ric, x, true) - cdf(ric, x, false)));
        }
        std::printf("    gain-ranked rule fit gap: rate %.2f%%, energy %.2f%%; "
                    "cdf sup distance %.4f%% (reported, not gated)\n",
                    100.0 * wr_gap, 100.0 * we_gap, 100.0 * sup);
    }

    std::printf("    elapsed %.2f s\n", seconds_since(t0));
    return ok;
}

// --- criterion 6: simulator agrees with closed forms within statistical error ---
bool criterion_sim_matrix() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;

    int cells = 0, trips = 0;
    struct Pop { Family family; double shape; };
    for (Pop pop : {Pop{Family::Rayleigh, 0.0}, Pop{Family::Nakagami, 3.0},
                    Pop{Family::Weibull, 1.5}}) {
        SystemParams sys;
        sys.power = 1.0;
        sys.noise = reference_noise_w();
        sys.eta = 0.5;
        for (int n = 1; n <= 4; ++n)
            sys.users.push_back(make_user(pop.family, pop.shape, n * 1e-5));
        const std::vector<sim::Policy> policies = {
            sim::Policy::round_robin(), sim::Policy::conv_et(),
            sim::Policy::order_snr(2), sim::Policy::order_nsnr(2),
            sim::Policy::order_et({1, 2})};
        for (const sim::Policy& pol : policies) {
            sim::SimResult res = sim::simulate(sys, pol, 1000000, 42);
            for (int n = 1; n <= 4; ++n) {
                double cr = 0.0, ce = 0.0;
                switch (pol.kind) {
                    case sim::PolicyKind::RoundRobin: {
                        std::vector<UserMetrics> m = cf::rr_metrics(sys);
                        cr = m[static_cast<size_t>(n) - 1].rate;
                        ce = m[static_cast<size_t>(n) - 1].energy;
                        break;
                    }
                    case sim::PolicyKind::ConvEt: {
                        EtResult m = cf::conv_et(sys);
                        cr = m.throughput;
                        ce = m.energy[static_cast<size_t>(n) - 1];
                        break;
                    }
                    case sim::PolicyKind::OrderSnr:
                        cr = cf::order_snr_rate(sys, 2, n);
                        ce = cf::order_snr_energy(sys, 2, n);
                        break;
                    case sim::PolicyKind::OrderNsnr:
                        cr = cf::order_nsnr_rate(sys, 2, n);
                        ce = cf::order_nsnr_energy(sys, 2, n);
                        break;
                    case sim::PolicyKind::OrderEt: {
                        EtResult m = cf::order_et(sys, {1, 2});
                        cr = m.throughput;
                        ce = m.energy[static_cast<size_t>(n) - 1];
                        break;
                    }
                }
                const sim::UserSimStats& u = res.users[static_cast<size_t>(n) - 1];
                double zr = (u.rate - cr) / u.rate_se;
                double ze = (u.energy - ce) / u.energy_se;
                cells += 2;
                if (std::fabs(zr) > kZScoreGate) {
                    ++trips;
                    std::printf("    TRIP rate %s %s user %d z=%.2f cf=%.6g sim=%.6g\n",
                                family_name(pop.family), sim::policy_label(pol).c_str(),
                                n, zr, cr, u.rate);
                }
                if (std::fabs(ze) > kZScoreGate) {
                    ++trips;
                    std::printf("    TRIP energy %s %s user %d z=%.2f cf=%.6g sim=%.6g\n",
                                family_name(pop.family), sim::policy_label(pol).c_str(),
                                n, ze, ce, u.energy);
                }
            }
        }
    }
    std::printf("    %d z-score cells at seed 42, %d beyond %.0f standard errors\n",
                cells, trips, kZScoreGate);
    ok &= expect(cells == 120, "expected 3 families x 5 policies x 4 users x 2 metrics");
    ok &= expect(trips == 0, "simulation drifted from the closed forms");

    double dt = seconds_since(t0);
    ok &= expect(dt < kMatrixTimeLimit, "simulation matrix exceeded its time budget");
    std::printf("    elapsed %.2f s (limit %.0f s)\n", dt, kMatrixTimeLimit);
    return ok;
}

// --- criterion 7: structural identities hold ---
// The full suite lives in its own binary; when its path is exported we run
// it, otherwise a compact in-process subset keeps this gate meaningful.
bool criterion_properties() {
    if (const char* bin = std::getenv("SWIPT_PROPERTIES_BIN")) {
        std::string cmd = std::string(bin) + " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        std::printf("    delegated to %s (exit %d)\n", bin, rc);
        return expect(rc == 0, "property suite reported failures");
    }

    bool ok = true;

    // Rank mixture: scheduling each rank in turn recovers full-time rates.
    {
        SystemParams sys;
        sys.power = 1.0;
        sys.noise = 1e-12;
        sys.eta = 0.5;
        for (double om : {1e-7, 2.2e-7, 0.6e-7, 1.7e-7})
            sys.users.push_back(FadingSpec::rayleigh(om));
        for (int n = 1; n <= 4; ++n) {
            double sum = 0.0;
            for (int j = 1; j <= 4; ++j) sum += cf::order_nsnr_rate(sys, j, n);
            ok &= expect(rel(sum, cf::fulltime_rate(sys, n)) < 1e-9,
                         "rank mixture must recover the full-time rate");
        }
    }

    // Order-statistic means: total is the population total, rows increase.
    for (FadingSpec spec : {FadingSpec::rayleigh(1.0), FadingSpec::nakagami(3, 1.0),
                            FadingSpec::weibull(1.5, 1.0), FadingSpec::ricean(6.0, 1.0)}) {
        double sum = 0.0, prev = 0.0;
        for (int j = 1; j <= 4; ++j) {
            double m = cf::order_statistic_mean(spec, 4, j);
            ok &= expect(m > prev, "order-statistic means must increase with rank");
            prev = m;
            sum += m;
        }
        ok &= expect(rel(sum, 4.0) < 1e-8, "order-statistic means must sum to N");
    }

    // Restricting to every rank is no restriction.
    {
        SystemParams sys = small_system(Family::Weibull, 1.5, 3);
        EtResult full = cf::order_et(sys, {1, 2, 3});
        EtResult conv = cf::conv_et(sys);
        ok &= expect(rel(full.throughput, conv.throughput) < 1e-10,
                     "all-ranks restriction must match the unrestricted split");
    }

    // Shape limits collapse onto the exponential gain.
    {
        FadingSpec ray = FadingSpec::rayleigh(1.8);
        for (FadingSpec spec : {FadingSpec::nakagami(1, 1.8), FadingSpec::weibull(1.0, 1.8),
                                FadingSpec::ricean(0.0, 1.8)})
            for (double x : {0.3, 1.8, 5.4})
                ok &= expect(rel(pdf(spec, x), pdf(ray, x)) < 1e-10,
                             "shape limit must collapse onto the exponential gain");
    }

    // The all-users budget constraint is always exactly tight.
    {
        Rng rng(99);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> p(4);
            double sum = 0.0;
            for (double& v : p) sum += (v = -std::log(rng.uniform()));
            for (double& v : p) v /= sum;
            feas::FeasibilityReport rep = feas::check_feasibility(p, 2);
            for (const feas::ConstraintRecord& rec : rep.violated)
                ok &= expect(!(rec.condition == 2 && rec.users.size() == 4),
                             "full-group budget row can never be the blocker");
        }
    }

    // Round robin is exact, and reruns are bit-identical per seed.
    {
        SystemParams sys = small_system(Family::Rayleigh, 0.0, 4);
        sim::SimResult rr = sim::simulate(sys, sim::Policy::round_robin(), 10003, 5);
        std::uint64_t total = 0;
        for (const sim::UserSimStats& u : rr.users) {
            ok &= expect(u.sched_count == 2500 || u.sched_count == 2501,
                         "round robin must hand out whole-number shares");
            total += u.sched_count;
        }
        ok &= expect(total == 10003, "round robin must schedule every slot");
        sim::SimResult a = sim::simulate(sys, sim::Policy::order_nsnr(2), 20000, 42);
        sim::SimResult b = sim::simulate(sys, sim::Policy::order_nsnr(2), 20000, 42);
        for (int n = 0; n < 4; ++n)
            ok &= expect(a.users[static_cast<size_t>(n)].rate ==
                             b.users[static_cast<size_t>(n)].rate,
                         "equal seeds must reproduce bit-identical runs");
    }

    std::printf("    in-process subset: %s\n", ok ? "all identities hold" : "failures above");
    return ok;
}

} // namespace

int main() {
    std::printf("acceptance gate, pinned tolerances; exit status = failure count\n");

    verdict(1, "equal-throughput split on a strong/weak population", criterion_split());
    verdict(2, "million-slot rank-set simulation hits the reference rates",
            criterion_long_run());
    verdict(3, "best-to-worst rank swap tradeoffs, shaped fading", criterion_swap_shaped());
    verdict(4, "best-to-worst rank swap tradeoffs, line-of-sight fading",
            criterion_swap_los());
    verdict(5, "closed forms agree with the quadrature oracle",
            criterion_oracle_agreement());
    verdict(6, "simulator agrees with closed forms within statistical error",
            criterion_sim_matrix());
    verdict(7, "structural identities hold", criterion_properties());

    std::printf("acceptance: %d/7 criteria passed (%d checks)\n", 7 - failures, checks);
    return failures;
}
