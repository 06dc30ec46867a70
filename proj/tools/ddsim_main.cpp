// ddsim: discover, simulate and evaluate business process simulation models.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 pipeline error.
// DDSIM_LOG_LEVEL=trace|debug|info|warn|error|off (default warn), logs go to stderr.

#include "ddsim/csv.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/experiment.hpp"
#include "ddsim/log_ops.hpp"
#include "ddsim/metrics.hpp"
#include "ddsim/optimizer.hpp"
#include "ddsim/serialization.hpp"
#include "ddsim/simulator.hpp"
#include "ddsim/time.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace ddsim;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitPipeline = 3;

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("ddsim");
    spdlog::set_default_logger(logger);
    spdlog::set_pattern("[%l] %v");
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("DDSIM_LOG_LEVEL")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to off; only honour real names
        if (level != spdlog::level::off || std::string_view(env) == "off")
            spdlog::set_level(level);
        else
            spdlog::warn("ignoring unknown DDSIM_LOG_LEVEL '{}'", env);
    }
}

// "case_id=CaseID,activity=Task" -> mapping; an empty resource disables it.
ColumnMapping parse_columns(const std::string& spec) {
    ColumnMapping m;
    if (spec.empty()) return m;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto comma = std::min(spec.find(',', pos), spec.size());
        const auto item = spec.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgumentError("bad --columns entry '" + item + "'");
        const auto key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "case_id") m.case_id = value;
        else if (key == "activity") m.activity = value;
        else if (key == "resource") m.resource = value;
        else if (key == "start_timestamp") m.start = value;
        else if (key == "end_timestamp") m.end = value;
        else throw ArgumentError("unknown column field '" + key + "'");
        pos = comma + 1;
    }
    return m;
}

EventLog load_log(const std::string& path, const std::string& columns) {
    spdlog::info("reading {}", path);
    auto log = read_csv(path, parse_columns(columns));
    spdlog::info("{} traces, {} events", log.size(), log.num_events());
    return log;
}

int cmd_stats(const std::string& path, const std::string& columns, bool as_json) {
    const auto s = compute_statistics(load_log(path, columns));
    if (as_json) {
        nlohmann::ordered_json j;
        j["traces"] = s.num_traces;
        j["events"] = s.num_events;
        j["activities"] = s.num_activities;
        j["avg_activities_per_trace"] = s.avg_activities_per_trace;
        j["max_activities_per_trace"] = s.max_activities_per_trace;
        j["mean_duration_seconds"] = s.mean_duration_seconds;
        j["max_duration_seconds"] = to_seconds(s.max_duration);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "traces                 " << s.num_traces << '\n'
                  << "events                 " << s.num_events << '\n'
                  << "activities             " << s.num_activities << '\n'
                  << "avg events per trace   " << s.avg_activities_per_trace << '\n'
                  << "max events per trace   " << s.max_activities_per_trace << '\n'
                  << "mean trace duration s  " << s.mean_duration_seconds << '\n'
                  << "max trace duration s   " << to_seconds(s.max_duration) << '\n';
    }
    return 0;
}

struct DiscoverArgs {
    std::string log, columns, out, history, space;
    std::size_t trials = 50, runs = 5, threads = 1;
    std::uint64_t seed = 0;
    PipelineConfig fixed;
    std::string branching = "replay", conformance = "remove";
};

int cmd_discover(DiscoverArgs& a) {
    const auto log = load_log(a.log, a.columns);
    if (a.trials == 0) {
        // no search: one pipeline run with the given parameters
        const auto b = branching_mode_from_string(a.branching);
        const auto c = conformance_mode_from_string(a.conformance);
        if (!b || !c) throw ArgumentError("unknown branching or conformance mode");
        a.fixed.branching = *b;
        a.fixed.conformance = *c;
        const auto model = discover_bps_model(log, a.fixed);
        for (const auto& w : model.warnings) spdlog::warn("{}", w);
        save_bps_model(model, a.out);
        return 0;
    }
    const auto space = a.space.empty() ? SearchSpace::defaults() : SearchSpace::from_json(read_text_file(a.space));
    OptimizerOptions opt;
    opt.trials = a.trials;
    opt.runs_per_trial = a.runs;
    opt.seed = a.seed;
    opt.threads = a.threads;
    const auto result = optimize_dds(log, space, opt);
    for (const auto& f : result.failures) spdlog::warn("trial {} failed: {}", f.index, f.error);
    for (const auto& t : result.history) spdlog::info("trial {} mean ELS {:.4f}", t.index, t.mean_els);
    spdlog::info("best trial {}", result.best_trial);
    save_bps_model(result.best, a.out);
    if (!a.history.empty()) write_text_file(a.history, history_to_json(result) + "\n");
    return 0;
}

int cmd_simulate(const std::string& model_path, std::size_t cases, std::uint64_t seed, const std::string& start,
                 const std::string& out, const std::string& audit) {
    const auto model = load_bps_model(model_path);
    SimConfig sc;
    sc.num_cases = cases;
    sc.seed = seed;
    sc.audit = !audit.empty();
    if (!start.empty()) {
        const auto t = parse_timestamp(start);
        if (!t) throw ArgumentError("bad --start timestamp '" + start + "'");
        sc.start_instant = *t;
    }
    const auto result = simulate(model, sc);
    for (const auto& w : result.warnings) spdlog::warn("{}", w);
    if (result.aborted_cases > 0) spdlog::warn("{} cases aborted", result.aborted_cases);
    if (out.empty() || out == "-")
        write_csv(result.log, std::cout);
    else
        write_csv(result.log, out);
    if (!audit.empty()) write_text_file(audit, audit_to_jsonl(result.audit));
    return 0;
}

int cmd_evaluate(const std::string& gen_path, const std::string& truth_path, const std::string& columns,
                 const MetricOptions& options, const std::string& json_out) {
    const auto gen = load_log(gen_path, columns);
    const auto truth = load_log(truth_path, columns);
    const auto r = evaluate(gen, truth, options);
    if (r.unmatched_generated + r.unmatched_truth > 0)
        spdlog::warn("logs differ in size; {} generated and {} truth traces left unpaired", r.unmatched_generated,
                     r.unmatched_truth);
    const auto j = metrics_to_json(r);
    if (!json_out.empty()) write_text_file(json_out, j + "\n");
    std::cout << j << "\n\n" << render_metrics(r);
    return 0;
}

struct ExperimentArgs {
    std::string config, log, columns, external_dir, out, table, space;
    std::vector<std::string> generators;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials, runs, generated_logs, bins, threads;
    std::optional<double> ratio;
    bool normalize_emd = false;
};

int cmd_experiment(const ExperimentArgs& a) {
    ExperimentConfig c;
    if (!a.config.empty())
        c = ExperimentConfig::from_json(read_text_file(a.config), fs::path(a.config).parent_path());
    if (!a.log.empty()) c.log_path = a.log;
    if (!a.columns.empty()) c.columns = parse_columns(a.columns);
    if (!a.external_dir.empty()) c.external_dir = a.external_dir;
    if (!a.generators.empty()) c.generators = a.generators;
    if (!a.space.empty()) c.search_space = SearchSpace::from_json(read_text_file(a.space));
    if (a.seed) c.seed = *a.seed;
    if (a.trials) c.trials = *a.trials;
    if (a.runs) c.runs_per_trial = *a.runs;
    if (a.generated_logs) c.generated_logs = *a.generated_logs;
    if (a.bins) c.metrics.bins = *a.bins;
    if (a.threads) c.threads = *a.threads;
    if (a.ratio) c.split_ratio = *a.ratio;
    if (a.normalize_emd) c.metrics.normalize_emd = true;

    const auto report = run_experiment(c);
    for (const auto& g : report.generators) {
        for (const auto& w : g.warnings) spdlog::warn("{}: {}", g.name, w);
        if (g.error) spdlog::error("{}: {}", g.name, *g.error);
    }
    const auto table = render_report(report);
    if (!a.out.empty()) write_text_file(a.out, report_to_json(report) + "\n");
    if (!a.table.empty()) write_text_file(a.table, table);
    std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();

    CLI::App app{"Data-driven business process simulation toolkit"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    std::string columns;
    auto add_columns = [&](CLI::App* sub) {
        sub->add_option("--columns", columns,
                        "Column names, e.g. case_id=Case,activity=Task,resource=,start_timestamp=S,end_timestamp=E");
    };

    std::string stats_log;
    bool stats_json = false;
    auto* stats = app.add_subcommand("stats", "Summarize an event log");
    stats->add_option("--log", stats_log, "CSV event log")->required();
    stats->add_flag("--json", stats_json, "Print JSON");
    add_columns(stats);

    std::string split_log, split_train, split_test;
    double split_ratio = 0.7;
    auto* split = app.add_subcommand("split", "Temporal train/test split");
    split->add_option("--log", split_log, "CSV event log")->required();
    split->add_option("--ratio", split_ratio, "Training share")->capture_default_str();
    split->add_option("--train", split_train, "Training fold output")->required();
    split->add_option("--test", split_test, "Test fold output")->required();
    add_columns(split);

    DiscoverArgs disc;
    auto* discover = app.add_subcommand("discover", "Search and discover a simulation model");
    discover->add_option("--log", disc.log, "Training log")->required();
    discover->add_option("--trials", disc.trials, "Random-search trials; 0 runs the pipeline once")
        ->capture_default_str();
    discover->add_option("--runs", disc.runs, "Simulation runs per trial")->capture_default_str();
    discover->add_option("--seed", disc.seed, "Master seed")->capture_default_str();
    discover->add_option("--out", disc.out, "Model JSON output")->required();
    discover->add_option("--history", disc.history, "Trial history JSON output");
    discover->add_option("--space", disc.space, "Search space JSON");
    discover->add_option("--threads", disc.threads, "Parallel trials (0 = all cores)")->capture_default_str();
    discover->add_option("--eta", disc.fixed.eta, "Arc filter (with --trials 0)")->capture_default_str();
    discover->add_option("--epsilon", disc.fixed.epsilon, "Concurrency gate (with --trials 0)")
        ->capture_default_str();
    discover->add_option("--pool-threshold", disc.fixed.pool_threshold, "Pool similarity (with --trials 0)")
        ->capture_default_str();
    discover->add_option("--branching", disc.branching, "equiprobable|replay (with --trials 0)")
        ->capture_default_str();
    discover->add_option("--conformance", disc.conformance, "remove|replace (with --trials 0)")
        ->capture_default_str();
    add_columns(discover);

    std::string sim_model, sim_out, sim_start, sim_audit;
    std::size_t sim_cases = 100;
    std::uint64_t sim_seed = 0;
    auto* sim = app.add_subcommand("simulate", "Simulate a model into an event log");
    sim->add_option("--model", sim_model, "Model JSON")->required();
    sim->add_option("--cases", sim_cases, "Number of cases")->capture_default_str();
    sim->add_option("--seed", sim_seed, "Seed")->capture_default_str();
    sim->add_option("--start", sim_start, "First arrival, ISO-8601 (default epoch)");
    sim->add_option("--out", sim_out, "CSV output ('-' for stdout)");
    sim->add_option("--audit", sim_audit, "Per-activity JSON lines output");

    std::string ev_gen, ev_truth, ev_json;
    MetricOptions ev_opts;
    auto* ev = app.add_subcommand("evaluate", "Compare a generated log with a ground-truth log");
    ev->add_option("--generated", ev_gen, "Generated log")->required();
    ev->add_option("--truth", ev_truth, "Ground-truth log")->required();
    ev->add_option("--bins", ev_opts.bins, "EMD histogram bins")->capture_default_str();
    ev->add_flag("--normalize-emd", ev_opts.normalize_emd, "Divide EMD by bins - 1");
    ev->add_option("--json", ev_json, "Also write the JSON report here");
    add_columns(ev);

    ExperimentArgs ex;
    auto* exp = app.add_subcommand("experiment", "Split, optimize, generate and score");
    exp->add_option("--config", ex.config, "Experiment JSON config");
    exp->add_option("--log", ex.log, "Event log (overrides config)");
    exp->add_option("--seed", ex.seed, "Master seed");
    exp->add_option("--trials", ex.trials, "Random-search trials");
    exp->add_option("--runs", ex.runs, "Runs per trial");
    exp->add_option("--generated-logs", ex.generated_logs, "Logs generated per generator");
    exp->add_option("--split-ratio", ex.ratio, "Training share");
    exp->add_option("--generators", ex.generators, "dds and/or external")->delimiter(',');
    exp->add_option("--external-dir", ex.external_dir, "Directory of pre-generated CSV logs");
    exp->add_option("--space", ex.space, "Search space JSON");
    exp->add_option("--bins", ex.bins, "EMD histogram bins");
    exp->add_option("--threads", ex.threads, "Parallel optimizer trials (0 = all cores)");
    exp->add_flag("--normalize-emd", ex.normalize_emd, "Divide EMD by bins - 1");
    exp->add_option("--out", ex.out, "Report JSON output");
    exp->add_option("--table", ex.table, "Report table output");
    add_columns(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stats) return cmd_stats(stats_log, columns, stats_json);
        if (*split) {
            const auto s = temporal_split(load_log(split_log, columns), split_ratio);
            write_csv(s.train, split_train);
            write_csv(s.test, split_test);
            spdlog::info("train {} traces, test {} traces", s.train.size(), s.test.size());
            return 0;
        }
        if (*discover) return cmd_discover(disc);
        if (*sim) return cmd_simulate(sim_model, sim_cases, sim_seed, sim_start, sim_out, sim_audit);
        if (*ev) return cmd_evaluate(ev_gen, ev_truth, columns, ev_opts, ev_json);
        if (*exp) return cmd_experiment(ex);
    } catch (const ValidationError& e) {
        spdlog::error("{}", e.what());
        for (std::size_t i = 0; i < e.lines().size() && i < 20; ++i) spdlog::error("  line {}", e.lines()[i]);
        return kExitData;
    } catch (const OptimizationError& e) {
        spdlog::error("{}", e.what());
        for (const auto& d : e.diagnostics()) spdlog::error("  {}", d);
        return kExitPipeline;
    } catch (const Error& e) {
        spdlog::error("{}", e.what());
        switch (e.kind()) {
            case ErrorKind::usage: return kExitUsage;
            case ErrorKind::data: return kExitData;
            case ErrorKind::pipeline: return kExitPipeline;
        }
    } catch (const fs::filesystem_error& e) {
        spdlog::error("{}", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        spdlog::error("unexpected failure: {}", e.what());
        return kExitPipeline;
    }
    return kExitUsage;
}
