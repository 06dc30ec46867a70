#pragma once

#include "ddsim/bps_model.hpp"
#include "ddsim/event_log.hpp"
#include "ddsim/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ddsim {

struct SimConfig {
    std::size_t num_cases = 1;
    std::uint64_t seed = 0;
    Timestamp start_instant{};
    /// Record one AuditRecord per activity instance.
    bool audit = false;
};

/// Event-queue entry. Entries at the same instant are processed in the order
/// activity_end < case_arrival < activity_start, then by case index, then node.
enum class SimEventKind { activity_end = 0, case_arrival = 1, activity_start = 2 };

struct SimEvent {
    SimEventKind kind;
    Timestamp time;
    std::size_t case_index;
    NodeId node;
};

struct AuditRecord {
    std::string case_id;
    std::string activity;
    NodeId node = 0;
    std::string pool;
    std::string resource;
    Timestamp enabled;
    Timestamp start;
    Timestamp end;
};

struct SimulationResult {
    EventLog log;
    std::size_t aborted_cases = 0;
    std::vector<std::string> warnings;
    std::vector<AuditRecord> audit;  // empty unless SimConfig::audit
};

/// Runs the model as a discrete-event system with eager resources.
///
/// Case i (0-based) arrives at start_instant plus the sum of i inter-arrival
/// draws. Tokens move through gateways instantly: xor splits draw a branch,
/// and splits fork, and joins wait for every input. An enabled task draws its
/// duration and joins its pool's FIFO queue; whenever a pool member is free the
/// queue head starts at once on the free member with the smallest name.
///
/// Random streams: inter-arrival draws use Rng::stream(seed, "arrivals"); case
/// i uses Rng::stream(seed, "case", i) for its branch choices and durations in
/// enablement order. Case ids are 1-based, zero-padded to the width of
/// num_cases.
///
/// A case is aborted (and left out of the log) when it exceeds
/// max_case_length task executions, deadlocks, delivers more than one token to
/// end, or produces a trace that does not replay on the model. More than 10%
/// aborted cases raises SimulationError.
SimulationResult simulate(const BpsModel& model, const SimConfig& config);

/// One JSON object per line: case_id, activity, pool, resource, enabled, start, end.
std::string audit_to_jsonl(const std::vector<AuditRecord>& audit);

}  // namespace ddsim
