#pragma once

#include "ddsim/csv.hpp"
#include "ddsim/log_ops.hpp"
#include "ddsim/metrics.hpp"
#include "ddsim/optimizer.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ddsim {

struct ExperimentConfig {
    std::filesystem::path log_path;
    ColumnMapping columns{};
    double split_ratio = 0.7;
    std::size_t trials = 50;
    std::size_t runs_per_trial = 5;
    std::size_t generated_logs = 10;
    std::uint64_t seed = 0;
    /// Any of "dds" and "external".
    std::vector<std::string> generators{"dds"};
    /// Directory of pre-generated CSV logs for the external generator.
    std::filesystem::path external_dir;
    std::optional<SearchSpace> search_space;
    MetricOptions metrics{};
    std::size_t threads = 1;

    /// Keys mirror the field names; unknown keys raise ArgumentError.
    /// Relative paths resolve against `base_dir`.
    static ExperimentConfig from_json(const std::string& text, const std::filesystem::path& base_dir = {});
    /// Canonical JSON used for the config hash.
    std::string to_json() const;
    /// Throws ArgumentError for invalid values.
    void validate() const;
};

struct GeneratorResult {
    std::string name;
    std::vector<std::string> log_names;
    std::vector<MetricReport> per_log;
    /// Arithmetic means of per_log; meaningful only without `error`.
    MetricReport mean;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
};

struct Provenance {
    std::uint64_t seed = 0;
    std::string config_hash;
    std::string version;
};

struct ExperimentReport {
    LogStatistics log_statistics;
    std::size_t train_traces = 0;
    std::size_t test_traces = 0;
    std::vector<GeneratorResult> generators;
    std::optional<std::size_t> best_trial;
    std::optional<ConfigPoint> best_config;
    Provenance provenance;
};

/// Means of a non-empty list of reports (unmatched counts are summed).
MetricReport mean_report(const std::vector<MetricReport>& reports);

/// Scores every log against `truth` and fills per_log and mean.
GeneratorResult score_logs(std::string name, const std::vector<std::pair<std::string, EventLog>>& logs,
                           const EventLog& truth, const MetricOptions& options);

/// Temporal split, optimize_dds on the training fold, simulate
/// `generated_logs` logs of |test| cases (seeds derived from the master seed)
/// and score them against the test fold. The external generator reads every
/// *.csv in external_dir in name order; logs of the wrong size or that fail to
/// parse are excluded with a warning. A generator without usable logs carries
/// an error instead of metrics.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Hex FNV-1a of the canonical config JSON.
std::string config_hash(const ExperimentConfig& config);

std::string report_to_json(const ExperimentReport& report, int indent = 2);

/// Fixed-width table: one row per generator with ELS, CFLS, MAE and EMD to two
/// decimals; the row with the highest ELS is marked with '*'.
std::string render_report(const ExperimentReport& report);

/// Same table for a single comparison (used by `evaluate`).
std::string render_metrics(const MetricReport& report);
std::string metrics_to_json(const MetricReport& report, int indent = 2);

/// Library version string.
std::string version();

}  // namespace ddsim
