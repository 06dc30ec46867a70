#pragma once

#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"

#include <span>
#include <string>
#include <vector>

namespace ddsim {

struct ReplayOptions {
    /// Search budget; a trace that needs more states is reported as not fitting.
    std::size_t max_states = 200000;
};

struct ReplayResult {
    bool fits = false;
    /// Tokens produced per edge id along the chosen firing sequence (zero-filled
    /// when the trace does not fit).
    std::vector<std::size_t> edge_traversals;
};

/// Token-game replay. Start emits one token; tasks fire in trace order;
/// gateways fire silently. The trace fits iff every activity fires and the run
/// ends with a single token on the edge into end. Among fitting runs the one
/// with the fewest silent firings is returned (ties broken deterministically by
/// node and edge ids).
ReplayResult replay_trace(const ProcessModel& model, std::span<const std::string> activities,
                          const ReplayOptions& options = {});
ReplayResult replay_trace(const ProcessModel& model, const Trace& trace,
                          const ReplayOptions& options = {});

}  // namespace ddsim
