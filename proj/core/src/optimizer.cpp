#include "ddsim/optimizer.hpp"

#include "ddsim/discovery.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/log_ops.hpp"
#include "ddsim/metrics.hpp"
#include "ddsim/resource_pools.hpp"
#include "ddsim/simulator.hpp"

#include "json_codec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

namespace ddsim {
namespace {

using json_codec::json;
using json_codec::ordered_json;

const std::set<std::string> kContinuous = {"eta", "epsilon", "pool_threshold"};
const std::set<std::string> kCategorical = {"branching", "conformance"};

bool valid_choice(const std::string& name, const std::string& value) {
    if (name == "branching") return branching_mode_from_string(value).has_value();
    if (name == "conformance") return conformance_mode_from_string(value).has_value();
    return false;
}

ordered_json encode(const ConfigPoint& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : p.reals) j[k] = v;
    for (const auto& [k, v] : p.choices) j[k] = v;
    return j;
}

}  // namespace

BpsModel discover_bps_model(const EventLog& log, const PipelineConfig& config) {
    auto model = discover_model(log, config.eta, config.epsilon);
    const auto conformant = enforce_conformance(model, log, config.conformance);
    auto branching = compute_branching_probabilities(model, conformant.log, config.branching);
    auto pools = discover_resource_pools(log, config.pool_threshold);
    return assemble_bps_model(std::move(model), std::move(branching), extract_interarrival(log),
                              extract_activity_durations(log), std::move(pools.pools),
                              std::move(pools.activity_pool));
}

SearchSpace SearchSpace::defaults() {
    return SearchSpace{{
        {"eta", ContinuousRange{0.0, 1.0}},
        {"epsilon", ContinuousRange{0.0, 1.0}},
        {"branching", CategoricalSet{{"equiprobable", "replay"}}},
        {"conformance", CategoricalSet{{"remove", "replace"}}},
        {"pool_threshold", ContinuousRange{0.5, 0.95}},
    }};
}

void SearchSpace::validate() const {
    if (dimensions.empty()) throw ArgumentError("search space is empty");
    std::set<std::string> seen;
    for (const auto& d : dimensions) {
        if (!seen.insert(d.name).second) throw ArgumentError("duplicated dimension '" + d.name + "'");
        if (const auto* r = std::get_if<ContinuousRange>(&d.domain)) {
            if (!kContinuous.contains(d.name)) throw ArgumentError("unknown continuous dimension '" + d.name + "'");
            if (!(r->lo <= r->hi) || !std::isfinite(r->lo) || !std::isfinite(r->hi))
                throw ArgumentError("bad bounds for '" + d.name + "'");
            if (r->lo < 0.0 || r->hi > 1.0) throw ArgumentError("'" + d.name + "' must lie in [0, 1]");
        } else {
            const auto& c = std::get<CategoricalSet>(d.domain);
            if (!kCategorical.contains(d.name)) throw ArgumentError("unknown categorical dimension '" + d.name + "'");
            if (c.values.empty()) throw ArgumentError("no values for '" + d.name + "'");
            for (const auto& v : c.values)
                if (!valid_choice(d.name, v)) throw ArgumentError("unknown value '" + v + "' for '" + d.name + "'");
        }
    }
}

SearchSpace SearchSpace::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ArgumentError(std::string("search space: ") + e.what());
    }
    if (!j.is_object()) throw ArgumentError("search space must be a JSON object");
    SearchSpace s;
    for (const auto& [name, v] : j.items()) {
        if (!v.is_array() || v.empty()) throw ArgumentError("dimension '" + name + "' must be a non-empty array");
        if (v[0].is_number()) {
            if (v.size() != 2 || !v[1].is_number()) throw ArgumentError("dimension '" + name + "' needs [lo, hi]");
            s.dimensions.push_back({name, ContinuousRange{v[0].get<double>(), v[1].get<double>()}});
        } else {
            CategoricalSet c;
            for (const auto& x : v) {
                if (!x.is_string()) throw ArgumentError("dimension '" + name + "' mixes types");
                c.values.push_back(x.get<std::string>());
            }
            s.dimensions.push_back({name, std::move(c)});
        }
    }
    s.validate();
    return s;
}

std::string SearchSpace::to_json() const {
    ordered_json j = ordered_json::object();
    for (const auto& d : dimensions) {
        if (const auto* r = std::get_if<ContinuousRange>(&d.domain))
            j[d.name] = {r->lo, r->hi};
        else
            j[d.name] = std::get<CategoricalSet>(d.domain).values;
    }
    return j.dump(2);
}

PipelineConfig ConfigPoint::to_pipeline_config() const {
    PipelineConfig c;
    if (auto it = reals.find("eta"); it != reals.end()) c.eta = it->second;
    if (auto it = reals.find("epsilon"); it != reals.end()) c.epsilon = it->second;
    if (auto it = reals.find("pool_threshold"); it != reals.end()) c.pool_threshold = it->second;
    if (auto it = choices.find("branching"); it != choices.end()) {
        const auto m = branching_mode_from_string(it->second);
        if (!m) throw ArgumentError("unknown branching mode '" + it->second + "'");
        c.branching = *m;
    }
    if (auto it = choices.find("conformance"); it != choices.end()) {
        const auto m = conformance_mode_from_string(it->second);
        if (!m) throw ArgumentError("unknown conformance mode '" + it->second + "'");
        c.conformance = *m;
    }
    return c;
}

ConfigPoint sample_config(const SearchSpace& space, Rng& rng) {
    ConfigPoint p;
    for (const auto& d : space.dimensions) {
        if (const auto* r = std::get_if<ContinuousRange>(&d.domain)) {
            p.reals[d.name] = r->lo + (r->hi - r->lo) * rng.uniform();
        } else {
            const auto& values = std::get<CategoricalSet>(d.domain).values;
            const auto k = static_cast<std::size_t>(rng.uniform() * static_cast<double>(values.size()));
            p.choices[d.name] = values[std::min(k, values.size() - 1)];
        }
    }
    return p;
}

OptimizationResult optimize_dds(const EventLog& train, const SearchSpace& space, const OptimizerOptions& options) {
    space.validate();
    if (options.trials == 0) throw ArgumentError("trials must be positive");
    if (options.runs_per_trial == 0) throw ArgumentError("runs per trial must be positive");
    const auto inner = temporal_split(train, options.inner_split);
    const EventLog& fit = inner.train;
    const EventLog& validation = inner.test;
    Timestamp sim_start = validation[0].first_start();
    for (const auto& t : validation.traces()) sim_start = std::min(sim_start, t.first_start());

    struct Slot {
        std::optional<TrialResult> ok;
        std::optional<TrialFailure> failed;
    };
    std::vector<Slot> slots(options.trials);

    auto run_trial = [&](std::size_t t) {
        auto rng = Rng::stream(options.seed, "trial", t);
        ConfigPoint point = sample_config(space, rng);
        try {
            auto model = options.pipeline ? options.pipeline(fit, point.to_pipeline_config())
                                         : discover_bps_model(fit, point.to_pipeline_config());
            TrialResult r;
            r.index = t;
            r.config = point;
            double sum = 0.0;
            for (std::size_t run = 0; run < options.runs_per_trial; ++run) {
                SimConfig sc;
                sc.num_cases = validation.size();
                sc.seed = derive_seed(options.seed, "run", t * options.runs_per_trial + run);
                sc.start_instant = sim_start;
                const auto sim = simulate(model, sc);
                const double e = els(sim.log, validation);
                r.per_run_els.push_back(e);
                sum += e;
            }
            r.mean_els = sum / static_cast<double>(r.per_run_els.size());
            r.model = std::move(model);
            slots[t].ok = std::move(r);
        } catch (const Error& e) {
            slots[t].failed = TrialFailure{t, point, e.what()};
        }
    };

    std::size_t threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = std::min(threads, options.trials);
    if (threads <= 1) {
        for (std::size_t t = 0; t < options.trials; ++t) run_trial(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                for (std::size_t t = next++; t < options.trials; t = next++) run_trial(t);
            });
    }

    std::vector<TrialResult> history;
    std::vector<TrialFailure> failures;
    for (auto& s : slots) {
        if (s.ok)
            history.push_back(std::move(*s.ok));
        else
            failures.push_back(std::move(*s.failed));
    }
    if (history.empty()) {
        std::vector<std::string> diagnostics;
        for (const auto& f : failures) diagnostics.push_back("trial " + std::to_string(f.index) + ": " + f.error);
        throw OptimizationError("every trial failed", std::move(diagnostics));
    }
    const auto best = select_best(history);
    OptimizationResult result{*history[best].model, history[best].index, std::move(history), std::move(failures)};
    if (!options.keep_models)
        for (auto& r : result.history) r.model.reset();
    return result;
}

std::size_t select_best(const std::vector<TrialResult>& history) {
    if (history.empty()) throw ArgumentError("empty history");
    std::size_t best = 0;
    for (std::size_t i = 1; i < history.size(); ++i)
        if (history[i].mean_els > history[best].mean_els) best = i;
    return best;
}

std::string history_to_json(const OptimizationResult& result, int indent) {
    ordered_json j;
    j["best_trial"] = result.best_trial;
    ordered_json trials = ordered_json::array();
    for (const auto& r : result.history) {
        ordered_json t;
        t["trial"] = r.index;
        t["config"] = encode(r.config);
        t["per_run_els"] = r.per_run_els;
        t["mean_els"] = r.mean_els;
        trials.push_back(std::move(t));
    }
    j["trials"] = std::move(trials);
    ordered_json failures = ordered_json::array();
    for (const auto& f : result.failures) {
        ordered_json t;
        t["trial"] = f.index;
        t["config"] = encode(f.config);
        t["error"] = f.error;
        failures.push_back(std::move(t));
    }
    j["failures"] = std::move(failures);
    return j.dump(indent);
}

}  // namespace ddsim
