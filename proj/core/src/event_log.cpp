#include "ddsim/event_log.hpp"

#include "ddsim/errors.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace ddsim {

bool event_order(const Event& a, const Event& b) {
    return std::tie(a.start, a.end, a.activity) < std::tie(b.start, b.end, b.activity);
}

Trace::Trace(std::string case_id, std::vector<Event> events)
    : case_id_(std::move(case_id)), events_(std::move(events)) {
    for (const auto& e : events_) {
        if (e.case_id != case_id_)
            throw ValidationError("event of case '" + e.case_id + "' placed in trace '" +
                                      case_id_ + "'",
                                  {case_id_});
        if (e.activity.empty())
            throw ValidationError("empty activity label in case '" + case_id_ + "'", {case_id_});
        if (e.end < e.start)
            throw ValidationError("event '" + e.activity + "' ends before it starts in case '" +
                                      case_id_ + "'",
                                  {case_id_});
    }
    std::stable_sort(events_.begin(), events_.end(), event_order);
}

Timestamp Trace::first_start() const {
    Timestamp t = events_.empty() ? Timestamp{} : events_.front().start;
    for (const auto& e : events_) t = std::min(t, e.start);
    return t;
}

Timestamp Trace::last_end() const {
    Timestamp t = events_.empty() ? Timestamp{} : events_.front().end;
    for (const auto& e : events_) t = std::max(t, e.end);
    return t;
}

Duration Trace::cycle_time() const {
    if (events_.empty()) return Duration{0};
    return last_end() - first_start();
}

std::vector<std::string> Trace::activities() const {
    std::vector<std::string> out;
    out.reserve(events_.size());
    for (const auto& e : events_) out.push_back(e.activity);
    return out;
}

EventLog::EventLog(std::vector<Trace> traces) : traces_(std::move(traces)) {
    std::unordered_set<std::string> seen;
    for (const auto& t : traces_) {
        if (!seen.insert(t.case_id()).second)
            throw ValidationError("duplicated case id '" + t.case_id() + "'", {t.case_id()});
        for (const auto& e : t.events()) {
            activities_.insert(e.activity);
            if (!e.resource.empty()) resources_.insert(e.resource);
        }
        num_events_ += t.size();
    }
}

}  // namespace ddsim
