#pragma once

#include "ddsim/event_log.hpp"

#include <set>
#include <string>
#include <utility>

namespace ddsim {

struct LogStatistics {
    std::size_t num_traces = 0;
    std::size_t num_events = 0;
    std::size_t num_activities = 0;
    double avg_activities_per_trace = 0.0;
    std::size_t max_activities_per_trace = 0;
    double mean_duration_seconds = 0.0;
    Duration max_duration{0};
};

/// Throws EmptyInputError on an empty log.
LogStatistics compute_statistics(const EventLog& log);

struct LogSplit {
    EventLog train;
    EventLog test;
};

/// Orders traces by their earliest start (case id breaks ties) and puts the
/// first ceil(ratio * N) into `train`. Throws ArgumentError when ratio is not
/// in (0, 1), InsufficientDataError with fewer than two traces and
/// DegenerateSplitError when either side would be empty.
LogSplit temporal_split(const EventLog& log, double ratio);

/// Number of traces that go to the training side of temporal_split.
std::size_t split_point(std::size_t num_traces, double ratio);

/// Symmetric set of unordered activity pairs.
class ConcurrencyRelation {
public:
    ConcurrencyRelation() = default;

    void insert(const std::string& a, const std::string& b);
    bool contains(const std::string& a, const std::string& b) const;
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    /// Pairs with first < second.
    const std::set<std::pair<std::string, std::string>>& pairs() const noexcept { return pairs_; }

    friend bool operator==(const ConcurrencyRelation&, const ConcurrencyRelation&) = default;

private:
    std::set<std::pair<std::string, std::string>> pairs_;
};

/// (A, B) are concurrent iff both A directly followed by B and B directly
/// followed by A occur somewhere in the log.
ConcurrencyRelation discover_concurrency(const EventLog& log);

}  // namespace ddsim
