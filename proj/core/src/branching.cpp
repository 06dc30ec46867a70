#include "ddsim/branching.hpp"

#include "ddsim/replay.hpp"

#include <map>
#include <vector>

namespace ddsim {

std::string_view to_string(BranchingMode mode) {
    return mode == BranchingMode::equiprobable ? "equiprobable" : "replay";
}

std::optional<BranchingMode> branching_mode_from_string(std::string_view name) {
    if (name == "equiprobable") return BranchingMode::equiprobable;
    if (name == "replay") return BranchingMode::replay;
    return std::nullopt;
}

BranchingProbabilities equiprobable_branching(const ProcessModel& model) {
    BranchingProbabilities p;
    for (NodeId s : model.nodes_of_kind(NodeKind::xor_split)) {
        const auto& outs = model.outgoing(s);
        for (EdgeId e : outs) p.splits[s][e] = 1.0 / static_cast<double>(outs.size());
    }
    return p;
}

BranchingProbabilities compute_branching_probabilities(const ProcessModel& model, const EventLog& log,
                                                       BranchingMode mode) {
    BranchingProbabilities p = equiprobable_branching(model);
    if (mode == BranchingMode::equiprobable) return p;

    std::map<std::vector<std::string>, std::size_t> variants;
    for (const auto& t : log.traces()) ++variants[t.activities()];
    std::vector<double> traversals(model.num_edges(), 0.0);
    for (const auto& [variant, count] : variants) {
        const auto r = replay_trace(model, std::span<const std::string>(variant));
        if (!r.fits) continue;
        for (EdgeId e = 0; e < model.num_edges(); ++e)
            traversals[e] += static_cast<double>(r.edge_traversals[e] * count);
    }

    for (auto& [split, probs] : p.splits) {
        double total = 0.0;
        for (const auto& [e, _] : probs) total += traversals[e];
        if (total == 0.0) {
            p.fallback.insert(split);
            continue;
        }
        for (auto& [e, prob] : probs) prob = traversals[e] / total;
    }
    return p;
}

}  // namespace ddsim
