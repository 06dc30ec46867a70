#include "ddsim/experiment.hpp"

#include "ddsim/errors.hpp"
#include "ddsim/random.hpp"
#include "ddsim/simulator.hpp"

#include "json_codec.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace ddsim {
namespace {

using json_codec::json;
using json_codec::ordered_json;

const std::set<std::string> kGenerators = {"dds", "external"};

template <class T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const std::exception& e) {
        throw ArgumentError("config key '" + key + "': " + e.what());
    }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return (path.is_relative() && !base.empty()) ? base / path : path;
}

}  // namespace

std::string version() { return DDSIM_VERSION; }

ExperimentConfig ExperimentConfig::from_json(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ArgumentError(std::string("experiment config: ") + e.what());
    }
    if (!j.is_object()) throw ArgumentError("experiment config must be a JSON object");
    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "log_path") c.log_path = resolve(base_dir, get_as<std::string>(j, key));
        else if (key == "split_ratio") c.split_ratio = get_as<double>(j, key);
        else if (key == "trials") c.trials = get_as<std::size_t>(j, key);
        else if (key == "runs_per_trial") c.runs_per_trial = get_as<std::size_t>(j, key);
        else if (key == "generated_logs") c.generated_logs = get_as<std::size_t>(j, key);
        else if (key == "seed") c.seed = get_as<std::uint64_t>(j, key);
        else if (key == "generators") c.generators = get_as<std::vector<std::string>>(j, key);
        else if (key == "external_dir") c.external_dir = resolve(base_dir, get_as<std::string>(j, key));
        else if (key == "search_space") c.search_space = SearchSpace::from_json(value.dump());
        else if (key == "bins") c.metrics.bins = get_as<std::size_t>(j, key);
        else if (key == "normalize_emd") c.metrics.normalize_emd = get_as<bool>(j, key);
        else if (key == "threads") c.threads = get_as<std::size_t>(j, key);
        else if (key == "columns") {
            const auto m = get_as<std::map<std::string, std::string>>(j, key);
            for (const auto& [field, column] : m) {
                if (field == "case_id") c.columns.case_id = column;
                else if (field == "activity") c.columns.activity = column;
                else if (field == "resource") c.columns.resource = column;
                else if (field == "start_timestamp") c.columns.start = column;
                else if (field == "end_timestamp") c.columns.end = column;
                else throw ArgumentError("unknown column field '" + field + "'");
            }
        } else {
            throw ArgumentError("unknown config key '" + key + "'");
        }
    }
    return c;
}

std::string ExperimentConfig::to_json() const {
    ordered_json j;
    j["log_path"] = log_path.generic_string();
    j["columns"] = {{"case_id", columns.case_id},
                    {"activity", columns.activity},
                    {"resource", columns.resource},
                    {"start_timestamp", columns.start},
                    {"end_timestamp", columns.end}};
    j["split_ratio"] = split_ratio;
    j["trials"] = trials;
    j["runs_per_trial"] = runs_per_trial;
    j["generated_logs"] = generated_logs;
    j["seed"] = seed;
    j["generators"] = generators;
    j["external_dir"] = external_dir.generic_string();
    j["search_space"] = ordered_json::parse((search_space ? *search_space : SearchSpace::defaults()).to_json());
    j["bins"] = metrics.bins;
    j["normalize_emd"] = metrics.normalize_emd;
    return j.dump();
}

void ExperimentConfig::validate() const {
    if (log_path.empty()) throw ArgumentError("no log path given");
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw ArgumentError("split ratio must lie in (0, 1)");
    if (generated_logs == 0) throw ArgumentError("generated_logs must be at least 1");
    if (trials == 0) throw ArgumentError("trials must be at least 1");
    if (runs_per_trial == 0) throw ArgumentError("runs_per_trial must be at least 1");
    if (metrics.bins < 2) throw ArgumentError("bins must be at least 2");
    if (generators.empty()) throw ArgumentError("no generator selected");
    for (const auto& g : generators) {
        if (!kGenerators.contains(g)) throw ArgumentError("unknown generator '" + g + "'");
        if (g == "external" && external_dir.empty()) throw ArgumentError("external generator needs external_dir");
    }
    if (search_space) search_space->validate();
}

std::string config_hash(const ExperimentConfig& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config.to_json())));
    return buf;
}

MetricReport mean_report(const std::vector<MetricReport>& reports) {
    MetricReport m;
    if (reports.empty()) return m;
    for (const auto& r : reports) {
        m.els += r.els;
        m.cfls += r.cfls;
        m.cycle_time_mae += r.cycle_time_mae;
        m.emd += r.emd;
        m.unmatched_generated += r.unmatched_generated;
        m.unmatched_truth += r.unmatched_truth;
    }
    const auto n = static_cast<double>(reports.size());
    m.els /= n;
    m.cfls /= n;
    m.cycle_time_mae /= n;
    m.emd /= n;
    return m;
}

GeneratorResult score_logs(std::string name, const std::vector<std::pair<std::string, EventLog>>& logs,
                           const EventLog& truth, const MetricOptions& options) {
    GeneratorResult g;
    g.name = std::move(name);
    for (const auto& [log_name, log] : logs) {
        g.log_names.push_back(log_name);
        g.per_log.push_back(evaluate(log, truth, options));
    }
    if (g.per_log.empty())
        g.error = "no usable logs";
    else
        g.mean = mean_report(g.per_log);
    return g;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto log = read_csv(config.log_path, config.columns);
    ExperimentReport report;
    report.log_statistics = compute_statistics(log);
    const auto split = temporal_split(log, config.split_ratio);
    report.train_traces = split.train.size();
    report.test_traces = split.test.size();
    report.provenance = {config.seed, config_hash(config), version()};

    for (const auto& gen : config.generators) {
        std::vector<std::pair<std::string, EventLog>> logs;
        std::vector<std::string> warnings;
        if (gen == "dds") {
            OptimizerOptions opt;
            opt.trials = config.trials;
            opt.runs_per_trial = config.runs_per_trial;
            opt.seed = derive_seed(config.seed, "optimizer");
            opt.threads = config.threads;
            const auto result =
                optimize_dds(split.train, config.search_space ? *config.search_space : SearchSpace::defaults(), opt);
            report.best_trial = result.best_trial;
            for (const auto& t : result.history)
                if (t.index == result.best_trial) report.best_config = t.config;
            Timestamp start = split.test[0].first_start();
            for (const auto& t : split.test.traces()) start = std::min(start, t.first_start());
            for (std::size_t i = 0; i < config.generated_logs; ++i) {
                SimConfig sc;
                sc.num_cases = split.test.size();
                sc.seed = derive_seed(config.seed, "generated", i);
                sc.start_instant = start;
                auto sim = simulate(result.best, sc);
                for (auto& w : sim.warnings) warnings.push_back("log " + std::to_string(i + 1) + ": " + w);
                logs.emplace_back("dds_" + std::to_string(i + 1), std::move(sim.log));
            }
        } else {
            std::vector<std::filesystem::path> files;
            std::error_code ec;
            for (const auto& entry : std::filesystem::directory_iterator(config.external_dir, ec))
                if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
            if (ec) warnings.push_back("cannot list " + config.external_dir.string() + ": " + ec.message());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) {
                try {
                    auto l = read_csv(f, config.columns);
                    if (l.size() != split.test.size()) {
                        warnings.push_back(f.filename().string() + ": " + std::to_string(l.size()) +
                                           " traces, expected " + std::to_string(split.test.size()));
                        continue;
                    }
                    logs.emplace_back(f.stem().string(), std::move(l));
                } catch (const Error& e) {
                    warnings.push_back(f.filename().string() + ": " + e.what());
                }
            }
        }
        auto g = score_logs(gen, logs, split.test, config.metrics);
        g.warnings = std::move(warnings);
        report.generators.push_back(std::move(g));
    }
    return report;
}

namespace {

ordered_json encode(const MetricReport& r) {
    ordered_json j;
    j["els"] = r.els;
    j["cfls"] = r.cfls;
    j["cycle_time_mae"] = r.cycle_time_mae;
    j["emd"] = r.emd;
    j["unmatched_generated"] = r.unmatched_generated;
    j["unmatched_truth"] = r.unmatched_truth;
    return j;
}

}  // namespace

std::string metrics_to_json(const MetricReport& report, int indent) { return encode(report).dump(indent); }

std::string report_to_json(const ExperimentReport& report, int indent) {
    ordered_json j;
    const auto& s = report.log_statistics;
    j["log_statistics"] = {{"traces", s.num_traces},
                           {"events", s.num_events},
                           {"activities", s.num_activities},
                           {"avg_activities_per_trace", s.avg_activities_per_trace},
                           {"max_activities_per_trace", s.max_activities_per_trace},
                           {"mean_duration_seconds", s.mean_duration_seconds},
                           {"max_duration_seconds", to_seconds(s.max_duration)}};
    j["train_traces"] = report.train_traces;
    j["test_traces"] = report.test_traces;
    if (report.best_trial) j["best_trial"] = *report.best_trial;
    if (report.best_config) {
        ordered_json c = ordered_json::object();
        for (const auto& [k, v] : report.best_config->reals) c[k] = v;
        for (const auto& [k, v] : report.best_config->choices) c[k] = v;
        j["best_config"] = c;
    }
    ordered_json gens = ordered_json::array();
    for (const auto& g : report.generators) {
        ordered_json e;
        e["name"] = g.name;
        if (g.error) {
            e["error"] = *g.error;
        } else {
            e["mean"] = encode(g.mean);
        }
        ordered_json logs = ordered_json::array();
        for (std::size_t i = 0; i < g.per_log.size(); ++i) {
            auto m = encode(g.per_log[i]);
            m["log"] = g.log_names[i];
            logs.push_back(std::move(m));
        }
        e["logs"] = std::move(logs);
        e["warnings"] = g.warnings;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    j["provenance"] = {{"seed", report.provenance.seed},
                       {"config_hash", report.provenance.config_hash},
                       {"version", report.provenance.version}};
    return j.dump(indent);
}

}  // namespace ddsim
