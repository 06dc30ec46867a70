#pragma once

#include "ddsim/assignment.hpp"
#include "ddsim/event_log.hpp"
#include "ddsim/log_ops.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ddsim {

struct MetricReport {
    double els = 0.0;
    double cfls = 0.0;
    double cycle_time_mae = 0.0;  // seconds
    double emd = 0.0;
    /// Traces of the larger log left out of the pairing (gen, truth).
    std::size_t unmatched_generated = 0;
    std::size_t unmatched_truth = 0;

    friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

/// Optimal one-to-one pairing of generated and truth traces.
struct Pairing {
    /// (generated index, truth index), sorted by generated index.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    double total_cost = 0.0;
    std::vector<std::size_t> unmatched_generated;
    std::vector<std::size_t> unmatched_truth;
};

using TraceCost = std::function<double(const Trace& generated, const Trace& truth)>;

/// Minimum total cost pairing. Surplus traces of the larger log stay unmatched.
Pairing pair_traces(const EventLog& gen, const EventLog& truth, const TraceCost& cost);
Pairing pair_traces(const CostMatrix& cost);

/// Largest processing and waiting time (seconds) over both logs.
struct TimeScale {
    double max_processing = 0.0;
    double max_waiting = 0.0;
};

TimeScale time_scale(const EventLog& a, const EventLog& b);

struct BptdWeights {
    double processing = 0.5;
    double waiting = 0.5;
};

/// Waiting time of each event: start minus the previous event's end in the
/// same trace, clamped at 0; the first event waits 0.
std::vector<double> waiting_times(const Trace& trace);

/// Edit distance with time-aware label matches: aligning two equal labels costs
/// w_p |dproc| / max_proc + w_w |dwait| / max_wait (a term is 0 when its max is
/// 0). Insertions, deletions and substitutions cost 1; an adjacent
/// transposition costs 0 for concurrent labels and 1 otherwise, plus the match
/// costs of the two aligned events. Normalized by the longer trace.
double bptd(const Trace& a, const Trace& b, const ConcurrencyRelation& concurrent, const TimeScale& scale,
            const BptdWeights& weights = {});

/// 1 - mean normalized distance over optimally paired traces. Concurrency
/// comes from the truth log.
double cfls(const EventLog& gen, const EventLog& truth);
double els(const EventLog& gen, const EventLog& truth, const BptdWeights& weights = {});

/// Mean absolute cycle-time difference (seconds) over optimally paired traces.
double cycle_time_mae(const EventLog& gen, const EventLog& truth);

/// 1-D earth mover's distance between two histograms of equal length with
/// bin-index ground distance: sum of |cumulative difference|. Histograms are
/// normalized to unit mass first; an all-zero histogram stays zero.
double emd_1d(std::span<const double> h1, std::span<const double> h2);

/// Histogram of per-activity mean durations of each log over `bins`
/// equal-width bins spanning both logs, compared with emd_1d. `normalize`
/// divides by bins - 1 so that the result lies in [0, 1].
double activity_duration_emd(const EventLog& gen, const EventLog& truth, std::size_t bins = 100,
                             bool normalize = false);

struct MetricOptions {
    std::size_t bins = 100;
    bool normalize_emd = false;
    BptdWeights weights{};
};

/// All four metrics. Throws EmptyInputError when either log is empty and
/// ArgumentError for bins < 2.
MetricReport evaluate(const EventLog& gen, const EventLog& truth, const MetricOptions& options = {});

}  // namespace ddsim
