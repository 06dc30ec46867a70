#include "ddsim/conformance.hpp"

#include "ddsim/edit_distance.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/log_ops.hpp"

#include <map>

namespace ddsim {

std::string_view to_string(ConformanceMode mode) {
    return mode == ConformanceMode::remove ? "remove" : "replace";
}

std::optional<ConformanceMode> conformance_mode_from_string(std::string_view name) {
    if (name == "remove") return ConformanceMode::remove;
    if (name == "replace") return ConformanceMode::replace;
    return std::nullopt;
}

namespace {

Trace transplant(const Trace& original, const std::vector<std::string>& variant) {
    std::vector<Event> events;
    events.reserve(variant.size());
    for (std::size_t i = 0; i < variant.size(); ++i) {
        Event e;
        e.case_id = original.case_id();
        e.activity = variant[i];
        if (i < original.size()) {
            e.resource = original[i].resource;
            e.start = original[i].start;
            e.end = original[i].end;
        } else {
            const Event& prev = events.back();
            e.start = e.end = prev.end;
        }
        events.push_back(std::move(e));
    }
    return Trace(original.case_id(), std::move(events));
}

}  // namespace

ConformanceResult enforce_conformance(const ProcessModel& model, const EventLog& log,
                                      ConformanceMode mode, const ReplayOptions& options) {
    // Replay once per variant.
    std::map<std::vector<std::string>, std::size_t> variant_count;
    std::map<std::vector<std::string>, bool> fits;
    for (const auto& t : log.traces()) ++variant_count[t.activities()];
    for (const auto& [variant, count] : variant_count)
        fits[variant] = replay_trace(model, std::span<const std::string>(variant), options).fits;

    std::vector<const std::vector<std::string>*> fitting;
    for (const auto& [variant, ok] : fits)
        if (ok) fitting.push_back(&variant);
    if (fitting.empty())
        throw NonConformantError("none of the " + std::to_string(log.size()) +
                                 " traces replays on the discovered model");

    ConformanceResult result;
    if (fitting.size() == fits.size()) {
        result.log = log;
        return result;
    }

    std::map<std::vector<std::string>, const std::vector<std::string>*> nearest;
    if (mode == ConformanceMode::replace) {
        Alphabet alphabet;
        const ConcurrencyMatrix conc(discover_concurrency(log), alphabet);
        std::vector<std::vector<int>> encoded;
        for (const auto* v : fitting) encoded.push_back(alphabet.encode(*v));
        for (const auto& [variant, ok] : fits) {
            if (ok) continue;
            const auto ev = alphabet.encode(variant);
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < fitting.size(); ++i) {
                const double d = dl_distance(ev, encoded[i], alphabet.size(), conc);
                // `fitting` is in lexicographic order, so strict comparisons keep
                // the lexicographically first variant among equals.
                if (d < best_d ||
                    (d == best_d && variant_count[*fitting[i]] > variant_count[*fitting[best]])) {
                    best_d = d;
                    best = i;
                }
            }
            nearest[variant] = fitting[best];
        }
    }

    std::vector<Trace> out;
    out.reserve(log.size());
    for (const auto& t : log.traces()) {
        const auto acts = t.activities();
        if (fits[acts]) {
            out.push_back(t);
            continue;
        }
        if (mode == ConformanceMode::remove) {
            ++result.removed;
            continue;
        }
        const auto& target = *nearest.at(acts);
        Trace rewritten = transplant(t, target);
        if (rewritten.activities() != target) {
            ++result.removed;
            continue;
        }
        out.push_back(std::move(rewritten));
        ++result.replaced;
    }
    result.log = EventLog(std::move(out));
    return result;
}

}  // namespace ddsim
