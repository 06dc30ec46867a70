#pragma once

#include "ddsim/time.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace ddsim {

/// One executed activity instance. An empty `resource` means the log did not
/// record who performed it.
struct Event {
    std::string case_id;
    std::string activity;
    std::string resource;
    Timestamp start;
    Timestamp end;

    Duration duration() const { return end - start; }

    friend bool operator==(const Event&, const Event&) = default;
};

/// Events of one case, ordered by start, then end, then activity label.
class Trace {
public:
    Trace() = default;

    /// Sorts `events` and checks that every event belongs to `case_id`,
    /// has a non-empty label and does not end before it starts.
    Trace(std::string case_id, std::vector<Event> events);

    const std::string& case_id() const noexcept { return case_id_; }
    const std::vector<Event>& events() const noexcept { return events_; }
    std::size_t size() const noexcept { return events_.size(); }
    bool empty() const noexcept { return events_.empty(); }
    const Event& operator[](std::size_t i) const { return events_[i]; }

    Timestamp first_start() const;
    Timestamp last_end() const;
    /// last end - first start; zero for an empty trace.
    Duration cycle_time() const;
    std::vector<std::string> activities() const;

    friend bool operator==(const Trace&, const Trace&) = default;

private:
    std::string case_id_;
    std::vector<Event> events_;
};

/// Strict weak order used to sort events inside a trace.
bool event_order(const Event& a, const Event& b);

class EventLog {
public:
    EventLog() = default;

    /// Rejects duplicated case ids. Trace order is preserved.
    explicit EventLog(std::vector<Trace> traces);

    const std::vector<Trace>& traces() const noexcept { return traces_; }
    std::size_t size() const noexcept { return traces_.size(); }
    bool empty() const noexcept { return traces_.empty(); }
    const Trace& operator[](std::size_t i) const { return traces_[i]; }
    std::size_t num_events() const noexcept { return num_events_; }

    const std::set<std::string>& activity_alphabet() const noexcept { return activities_; }
    /// Non-empty resource labels only.
    const std::set<std::string>& resource_alphabet() const noexcept { return resources_; }

    friend bool operator==(const EventLog& a, const EventLog& b) { return a.traces_ == b.traces_; }

private:
    std::vector<Trace> traces_;
    std::set<std::string> activities_;
    std::set<std::string> resources_;
    std::size_t num_events_ = 0;
};

}  // namespace ddsim
