#include "ddsim/log_ops.hpp"

#include "ddsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ddsim {

LogStatistics compute_statistics(const EventLog& log) {
    if (log.empty()) throw EmptyInputError("cannot compute statistics of an empty log");
    LogStatistics s;
    s.num_traces = log.size();
    s.num_activities = log.activity_alphabet().size();
    double total_ms = 0.0;
    for (const auto& t : log.traces()) {
        s.num_events += t.size();
        s.max_activities_per_trace = std::max(s.max_activities_per_trace, t.size());
        const Duration d = t.cycle_time();
        total_ms += static_cast<double>(d.count());
        s.max_duration = std::max(s.max_duration, d);
    }
    s.avg_activities_per_trace = static_cast<double>(s.num_events) / static_cast<double>(s.num_traces);
    s.mean_duration_seconds = total_ms / static_cast<double>(s.num_traces) / 1000.0;
    return s;
}

std::size_t split_point(std::size_t num_traces, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ArgumentError("split ratio must lie in (0, 1), got " + std::to_string(ratio));
    // The epsilon absorbs representation error such as 0.7 * 10 = 7.000000000000001.
    const double raw = ratio * static_cast<double>(num_traces);
    return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

LogSplit temporal_split(const EventLog& log, double ratio) {
    const std::size_t n = log.size();
    const std::size_t cut = split_point(n, ratio);
    if (n < 2) throw InsufficientDataError("temporal split needs at least two traces");
    if (cut == 0 || cut >= n)
        throw DegenerateSplitError("split of " + std::to_string(n) + " traces at ratio " +
                                   std::to_string(ratio) + " leaves one side empty");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto sa = log[a].first_start(), sb = log[b].first_start();
        if (sa != sb) return sa < sb;
        return log[a].case_id() < log[b].case_id();
    });
    std::vector<Trace> train, test;
    train.reserve(cut);
    test.reserve(n - cut);
    for (std::size_t i = 0; i < n; ++i) (i < cut ? train : test).push_back(log[idx[i]]);
    return {EventLog(std::move(train)), EventLog(std::move(test))};
}

void ConcurrencyRelation::insert(const std::string& a, const std::string& b) {
    if (a == b) return;
    pairs_.insert(a < b ? std::pair{a, b} : std::pair{b, a});
}

bool ConcurrencyRelation::contains(const std::string& a, const std::string& b) const {
    if (a == b) return false;
    return pairs_.count(a < b ? std::pair{a, b} : std::pair{b, a}) > 0;
}

ConcurrencyRelation discover_concurrency(const EventLog& log) {
    std::set<std::pair<std::string, std::string>> follows;
    for (const auto& t : log.traces())
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            follows.emplace(t[i].activity, t[i + 1].activity);
    ConcurrencyRelation rel;
    for (const auto& [a, b] : follows)
        if (a < b && follows.count({b, a})) rel.insert(a, b);
    return rel;
}

}  // namespace ddsim
