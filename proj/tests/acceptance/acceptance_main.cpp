// Acceptance suite: one PASS/FAIL/SKIP line per criterion, exit status 1 when
// anything failed. `ddsim_acceptance name...` runs a subset.

#include "ddsim/csv.hpp"
#include "ddsim/distribution.hpp"
#include "ddsim/edit_distance.hpp"
#include "ddsim/experiment.hpp"
#include "ddsim/log_ops.hpp"
#include "ddsim/metrics.hpp"
#include "ddsim/optimizer.hpp"
#include "ddsim/replay.hpp"
#include "ddsim/simulator.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ddsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    enum Status { pass, fail, skip } status = pass;
    std::string detail;
};

Outcome failed(std::string why) { return {Outcome::fail, std::move(why)}; }
Outcome skipped(std::string why) { return {Outcome::skip, std::move(why)}; }

std::vector<std::string> letters(const std::string& s) {
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

Outcome metric_identity() {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto log = fixtures::random_log(1000 + seed, 40 + seed * 4, 3 + seed % 5, 3 + seed % 6);
        const auto r = evaluate(log, log);
        if (r.els != 1.0 || r.cfls != 1.0 || r.cycle_time_mae != 0.0 || r.emd != 0.0) {
            std::ostringstream os;
            os << "seed " << seed << ": ELS " << r.els << " CFLS " << r.cfls << " MAE " << r.cycle_time_mae << " EMD "
               << r.emd;
            return failed(os.str());
        }
    }
    return {Outcome::pass, "25 logs"};
}

Outcome edit_distance_oracle() {
    const auto strings = oracle::all_strings("ABC", 5);
    std::size_t pairs = 0;
    for (const auto& a : strings) {
        const auto dist = oracle::edit_distances_from(a, "ABC", 7);
        for (const auto& b : strings) {
            const double n = static_cast<double>(std::max(a.size(), b.size()));
            const double got = cf_distance(letters(a), letters(b), {}) * n;
            const int expect = dist.at(b);
            if (std::abs(got - expect) > 1e-9)
                return failed("'" + a + "' vs '" + b + "': " + std::to_string(got) + " != " + std::to_string(expect));
            ++pairs;
        }
    }
    return {Outcome::pass, std::to_string(pairs) + " pairs"};
}

Outcome concurrency_transposition() {
    const std::string alphabet = "ABCDEFGH";
    for (std::uint64_t k = 0; k < 100; ++k) {
        Rng rng(derive_seed(7, "transposition", k));
        std::string labels = alphabet;
        std::shuffle(labels.begin(), labels.end(), rng);
        const auto len = 2 + static_cast<std::size_t>(rng.uniform() * 6);
        const std::string a = labels.substr(0, len);
        const auto i = static_cast<std::size_t>(rng.uniform() * static_cast<double>(len - 1));
        std::string b = a;
        std::swap(b[i], b[i + 1]);
        const std::string x(1, a[i]), y(1, a[i + 1]);
        // unrelated concurrent pairs in both relations
        ConcurrencyRelation others;
        for (int extra = 0; extra < 3; ++extra) {
            const std::string p(1, alphabet[static_cast<std::size_t>(rng.uniform() * 8)]);
            const std::string q(1, alphabet[static_cast<std::size_t>(rng.uniform() * 8)]);
            if (p != q && !((p == x && q == y) || (p == y && q == x))) others.insert(p, q);
        }
        ConcurrencyRelation with = others;
        with.insert(x, y);
        const double n = static_cast<double>(len);
        const double free = cf_distance(letters(a), letters(b), with) * n;
        const double paid = cf_distance(letters(a), letters(b), others) * n;
        if (std::abs(free) > 1e-12 || std::abs(paid - 1.0) > 1e-12)
            return failed(a + " -> " + b + ": concurrent " + std::to_string(free) + ", otherwise " +
                          std::to_string(paid));
    }
    return {Outcome::pass, "100 instances"};
}

Outcome hungarian_optimality() {
    for (std::uint64_t k = 0; k < 100; ++k) {
        Rng rng(derive_seed(11, "hungarian", k));
        const auto r = 1 + static_cast<std::size_t>(rng.uniform() * 7);
        const auto c = 1 + static_cast<std::size_t>(rng.uniform() * 7);
        CostMatrix m(r, c);
        // multiples of 1/64 keep every sum exact
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = std::floor(rng.uniform() * 640.0) / 64.0;
        const double got = solve_assignment(m).total_cost;
        const double expect = oracle::brute_force_assignment(m);
        if (got != expect)
            return failed(std::to_string(r) + "x" + std::to_string(c) + ": " + std::to_string(got) +
                          " != " + std::to_string(expect));
    }
    return {Outcome::pass, "100 matrices"};
}

Outcome emd_closed_form() {
    for (std::uint64_t k = 0; k < 50; ++k) {
        Rng rng(derive_seed(13, "emd", k));
        const auto n = 1 + static_cast<std::size_t>(rng.uniform() * 10);
        std::vector<double> a(n), b(n);
        for (auto& v : a) v = rng.uniform();
        for (auto& v : b) v = rng.uniform();
        double sa = 0, sb = 0, ca = 0, cb = 0, closed = 0;
        for (std::size_t i = 0; i < n; ++i) sa += a[i], sb += b[i];
        for (std::size_t i = 0; i < n; ++i) {
            ca += a[i] / sa;
            cb += b[i] / sb;
            closed += std::abs(ca - cb);
        }
        const double got = emd_1d(a, b);
        const double lp = oracle::transport_emd(a, b);
        if (std::abs(got - closed) > 1e-9 || std::abs(got - lp) > 1e-9)
            return failed("pair " + std::to_string(k) + ": " + std::to_string(got) + " closed " +
                          std::to_string(closed) + " lp " + std::to_string(lp));
    }
    return {Outcome::pass, "50 histogram pairs"};
}

Outcome simulator_semantics() {
    {
        SimConfig c;
        c.num_cases = 3;
        c.audit = true;
        const auto r = simulate(fixtures::single_task_model(60, 30), c);
        const double waits[] = {0, 30, 60}, ends[] = {60, 120, 180};
        for (std::size_t i = 0; i < 3; ++i) {
            if (to_seconds(r.audit.at(i).start - r.audit.at(i).enabled) != waits[i] ||
                to_seconds(r.log[i][0].end.time_since_epoch()) != ends[i])
                return failed("hand trace differs at case " + std::to_string(i + 1));
        }
    }
    const auto built = fixtures::two_gateway_model(0.3, 200.0, 2);
    SimConfig c;
    c.num_cases = 10000;
    c.seed = 2024;
    c.audit = true;
    const auto r = simulate(built.model, c);
    if (r.log.size() != 10000) return failed(std::to_string(r.log.size()) + " cases generated");
    if (auto v = oracle::check_exclusivity(r.audit); !v.empty()) return failed(v);
    if (auto v = oracle::check_eagerness(r.audit, built.model.pools); !v.empty()) return failed(v);
    std::size_t first = 0;
    for (const auto& t : r.log.traces()) {
        if (!replay_trace(built.model.process_model, t).fits) return failed("case " + t.case_id() + " does not replay");
        for (const auto& e : t.events()) first += e.activity == "B";
    }
    const double freq = static_cast<double>(first) / 10000.0;
    if (std::abs(freq - 0.3) > 0.02) return failed("branch frequency " + std::to_string(freq));
    return {Outcome::pass, "branch frequency " + std::to_string(freq)};
}

Outcome closed_loop_recovery() {
    std::ostringstream detail;
    bool ok = true;
    for (std::uint64_t master : {1ULL, 2ULL, 3ULL}) {
        const auto truth_model = fixtures::two_gateway_model(0.3, 600.0, 2).model;
        SimConfig sc;
        sc.num_cases = 2000;
        sc.seed = derive_seed(master, "truth");
        const auto log = simulate(truth_model, sc).log;
        const auto split = temporal_split(log, 0.7);
        OptimizerOptions opt;
        opt.trials = 20;
        opt.runs_per_trial = 3;
        opt.seed = derive_seed(master, "optimizer");
        opt.threads = 0;
        const auto result = optimize_dds(split.train, SearchSpace::defaults(), opt);
        SimConfig gen;
        gen.num_cases = split.test.size();
        gen.seed = derive_seed(master, "regenerate");
        gen.start_instant = split.test[0].first_start();
        const auto generated = simulate(result.best, gen).log;
        const double e = els(generated, split.test);
        const double c = cfls(generated, split.test);
        detail << "seed " << master << ": ELS " << e << " CFLS " << c << "; ";
        ok = ok && e >= 0.80 && c >= 0.90;
    }
    return {ok ? Outcome::pass : Outcome::fail, detail.str()};
}

Outcome distribution_recovery() {
    struct Case {
        const char* name;
        DistributionSpec spec;
    };
    const std::vector<Case> cases{{"exponential", DistributionSpec::exponential(3600)},
                                  {"uniform", DistributionSpec::uniform(100, 500)},
                                  {"fixed", DistributionSpec::fixed(60)}};
    std::ostringstream detail;
    bool ok = true;
    for (const auto& [name, spec] : cases) {
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(derive_seed(17, name, seed));
            std::vector<double> xs(10000);
            for (auto& x : xs) x = sample(spec, rng);
            const auto fit = fit_distribution(xs);
            if (fit.family == spec.family && std::abs(fit.mean() - spec.mean()) <= 0.05 * spec.mean()) ++hits;
        }
        detail << name << " " << hits << "/20; ";
        ok = ok && hits >= 18;
    }
    return {ok ? Outcome::pass : Outcome::fail, detail.str()};
}

// Rows of the rendered table that belong to the dds generator.
std::string dds_rows(const std::string& table) {
    std::istringstream in(table);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind("dds", 0) == 0) out += line + "\n";
    return out;
}

Outcome determinism() {
    const auto dir = fs::temp_directory_path() / "ddsim_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    SimConfig sc;
    sc.num_cases = 300;
    sc.seed = 99;
    write_csv(simulate(fixtures::two_gateway_model().model, sc).log, dir / "log.csv");
    ExperimentConfig c;
    c.log_path = dir / "log.csv";
    c.trials = 5;
    c.runs_per_trial = 2;
    c.generated_logs = 3;
    c.seed = 42;
    const auto a = run_experiment(c);
    c.threads = 4;
    const auto b = run_experiment(c);
    const auto ra = dds_rows(render_report(a)), rb = dds_rows(render_report(b));
    if (ra.empty()) return failed("no dds row");
    if (ra != rb) return failed("rows differ:\n" + ra + rb);
    if (report_to_json(a) != report_to_json(b)) return failed("JSON reports differ");
    return {Outcome::pass, ra.substr(0, ra.size() - 1)};
}

Outcome public_data_smoke() {
    const char* path = std::getenv("DDSIM_BPIC2012W");
    if (!path || !*path) return skipped("set DDSIM_BPIC2012W to a prepared BPIC 2012 W-subset CSV");
    ExperimentConfig c;
    c.log_path = path;
    auto env_size = [](const char* name, std::size_t fallback) {
        const char* v = std::getenv(name);
        return v ? static_cast<std::size_t>(std::strtoull(v, nullptr, 10)) : fallback;
    };
    c.trials = env_size("DDSIM_SMOKE_TRIALS", 50);
    c.runs_per_trial = env_size("DDSIM_SMOKE_RUNS", 5);
    c.generated_logs = env_size("DDSIM_SMOKE_LOGS", 10);
    c.threads = 0;
    c.seed = 2012;
    const auto r = run_experiment(c);
    const auto& g = r.generators.at(0);
    if (g.error) return failed(*g.error);
    const bool ok = g.mean.cfls >= 0.35 && g.mean.cfls <= 0.75;
    return {ok ? Outcome::pass : Outcome::fail, "CFLS " + std::to_string(g.mean.cfls)};
}

struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {"metric_identity", 60, metric_identity},
        {"edit_distance_oracle", 120, edit_distance_oracle},
        {"concurrency_transposition", 60, concurrency_transposition},
        {"hungarian_optimality", 60, hungarian_optimality},
        {"emd_closed_form", 60, emd_closed_form},
        {"simulator_semantics", 120, simulator_semantics},
        {"closed_loop_recovery", 900, closed_loop_recovery},
        {"distribution_recovery", 300, distribution_recovery},
        {"determinism", 300, determinism},
        {"public_data_smoke", 7200, public_data_smoke},
    };
    std::vector<std::string> only(argv + 1, argv + argc);
    int failures = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = failed(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.status == Outcome::pass && secs > c.budget_seconds) o = failed("over time budget");
        const char* tag = o.status == Outcome::pass ? "PASS" : o.status == Outcome::fail ? "FAIL" : "SKIP";
        std::printf("%s %-26s %8.2fs  %s\n", tag, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failures += o.status == Outcome::fail;
    }
    return failures == 0 ? 0 : 1;
}
