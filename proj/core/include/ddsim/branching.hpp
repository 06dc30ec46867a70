#pragma once

#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"

#include <map>
#include <optional>
#include <set>
#include <string_view>

namespace ddsim {

enum class BranchingMode { equiprobable, replay };

std::string_view to_string(BranchingMode mode);
std::optional<BranchingMode> branching_mode_from_string(std::string_view name);

/// Probability per outgoing edge of every xor split.
struct BranchingProbabilities {
    std::map<NodeId, std::map<EdgeId, double>> splits;
    /// Splits that never fired during replay and fell back to 1/k.
    std::set<NodeId> fallback;

    friend bool operator==(const BranchingProbabilities&, const BranchingProbabilities&) = default;
};

BranchingProbabilities equiprobable_branching(const ProcessModel& model);

/// equiprobable: 1/k per branch. replay: traversals of each branch edge over
/// traversals of its split, summed over replaying every trace of `log`
/// (traces that do not fit contribute nothing).
BranchingProbabilities compute_branching_probabilities(const ProcessModel& model, const EventLog& log,
                                                       BranchingMode mode);

}  // namespace ddsim
