#pragma once

#include "ddsim/bps_model.hpp"
#include "ddsim/branching.hpp"
#include "ddsim/conformance.hpp"
#include "ddsim/event_log.hpp"
#include "ddsim/random.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ddsim {

/// Hyperparameters of the discovery pipeline.
struct PipelineConfig {
    double eta = 0.4;
    double epsilon = 0.1;
    BranchingMode branching = BranchingMode::replay;
    ConformanceMode conformance = ConformanceMode::remove;
    double pool_threshold = 0.7;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

/// discover_model -> enforce_conformance -> branching probabilities on the
/// conformant traces; inter-arrival, durations and pools from the whole log.
BpsModel discover_bps_model(const EventLog& log, const PipelineConfig& config = {});

struct ContinuousRange {
    double lo = 0.0;
    double hi = 1.0;
};

struct CategoricalSet {
    std::vector<std::string> values;
};

struct Dimension {
    std::string name;
    std::variant<ContinuousRange, CategoricalSet> domain;
};

/// Dimensions are sampled in declaration order. Known names: eta, epsilon,
/// pool_threshold (continuous); branching, conformance (categorical). A
/// pipeline parameter without a dimension keeps its PipelineConfig default.
struct SearchSpace {
    std::vector<Dimension> dimensions;

    static SearchSpace defaults();
    /// {"eta": [0, 1], "branching": ["equiprobable", "replay"], ...}; key
    /// order of the document is kept.
    static SearchSpace from_json(const std::string& text);
    std::string to_json() const;

    /// Throws ArgumentError for an empty space, unknown names, reversed
    /// bounds, empty or unknown categories.
    void validate() const;
};

/// One sampled point: continuous values and categorical choices by name.
struct ConfigPoint {
    std::map<std::string, double> reals;
    std::map<std::string, std::string> choices;

    PipelineConfig to_pipeline_config() const;
    friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

ConfigPoint sample_config(const SearchSpace& space, Rng& rng);

struct TrialResult {
    std::size_t index = 0;
    ConfigPoint config;
    std::vector<double> per_run_els;
    double mean_els = 0.0;
    std::optional<BpsModel> model;
};

struct TrialFailure {
    std::size_t index = 0;
    ConfigPoint config;
    std::string error;
};

struct OptimizerOptions {
    std::size_t trials = 50;
    std::size_t runs_per_trial = 5;
    std::uint64_t seed = 0;
    double inner_split = 0.8;
    /// Trials evaluated concurrently; 0 = hardware concurrency.
    std::size_t threads = 1;
    /// Keep the discovered model of every successful trial, not only the best.
    bool keep_models = false;
    /// Model construction per trial; discover_bps_model when empty.
    std::function<BpsModel(const EventLog&, const PipelineConfig&)> pipeline;
};

struct OptimizationResult {
    BpsModel best;
    std::size_t best_trial = 0;
    /// Successful trials ordered by index.
    std::vector<TrialResult> history;
    std::vector<TrialFailure> failures;
};

/// Seeded random search. Trial t samples its configuration from
/// Rng::stream(seed, "trial", t) and simulates run r with
/// derive_seed(seed, "run", t * runs_per_trial + r). Each run simulates as
/// many cases as the validation part of the inner temporal split and is
/// scored with ELS against it. The best trial maximizes the mean ELS; the
/// earliest trial wins ties. Throws OptimizationError when every trial fails.
OptimizationResult optimize_dds(const EventLog& train, const SearchSpace& space, const OptimizerOptions& options);

/// Position in `history` of the highest mean_els, earliest on ties.
/// Throws ArgumentError for an empty history.
std::size_t select_best(const std::vector<TrialResult>& history);

/// Successful trials and failures as a JSON document.
std::string history_to_json(const OptimizationResult& result, int indent = 2);

}  // namespace ddsim
