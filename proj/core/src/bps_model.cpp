#include "ddsim/bps_model.hpp"

#include "ddsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ddsim {

const ResourcePool* BpsModel::find_pool(const std::string& id) const {
    for (const auto& p : pools)
        if (p.id == id) return &p;
    return nullptr;
}

std::vector<double> interarrival_samples(const EventLog& log) {
    if (log.size() < 2) throw InsufficientDataError("inter-arrival times need at least two traces");
    std::vector<Timestamp> arrivals;
    arrivals.reserve(log.size());
    for (const auto& t : log.traces())
        if (!t.empty()) arrivals.push_back(t.first_start());
    if (arrivals.size() < 2) throw InsufficientDataError("inter-arrival times need at least two traces");
    std::sort(arrivals.begin(), arrivals.end());
    std::vector<double> gaps;
    gaps.reserve(arrivals.size() - 1);
    for (std::size_t i = 1; i < arrivals.size(); ++i) gaps.push_back(to_seconds(arrivals[i] - arrivals[i - 1]));
    return gaps;
}

DistributionSpec extract_interarrival(const EventLog& log) { return fit_distribution(interarrival_samples(log)); }

std::map<std::string, DistributionSpec> extract_activity_durations(const EventLog& log) {
    std::map<std::string, std::vector<double>> samples;
    for (const auto& t : log.traces())
        for (const auto& e : t.events()) samples[e.activity].push_back(to_seconds(e.duration()));
    std::map<std::string, DistributionSpec> out;
    for (const auto& [activity, xs] : samples) out.emplace(activity, fit_distribution(xs));
    return out;
}

BpsModel assemble_bps_model(ProcessModel model, BranchingProbabilities branching,
                            DistributionSpec interarrival,
                            std::map<std::string, DistributionSpec> durations,
                            std::vector<ResourcePool> pools,
                            std::map<std::string, std::string> activity_pool,
                            std::size_t max_case_length) {
    std::vector<std::string> warnings;

    try {
        interarrival.validate();
        for (const auto& [label, spec] : durations) spec.validate();
    } catch (const ArgumentError& e) {
        throw AssemblyError(std::string("invalid distribution: ") + e.what());
    }

    std::set<std::string> pool_ids;
    for (const auto& p : pools) {
        if (p.resources.empty()) throw AssemblyError("pool '" + p.id + "' has no resources");
        if (!pool_ids.insert(p.id).second) throw AssemblyError("duplicated pool id '" + p.id + "'");
    }
    for (const auto& [label, pool] : activity_pool)
        if (!pool_ids.count(pool))
            throw AssemblyError("activity '" + label + "' refers to unknown pool '" + pool + "'", {label});

    std::vector<std::string> unassigned;
    for (const auto& label : model.task_labels()) {
        if (!durations.count(label)) {
            durations.emplace(label, DistributionSpec::fixed(0.0));
            warnings.push_back("task '" + label + "' has no duration data; using fixed(0)");
        }
        if (!activity_pool.count(label)) {
            if (pool_ids.count(kSystemPool)) {
                activity_pool.emplace(label, kSystemPool);
                warnings.push_back("task '" + label + "' has no pool; assigned to " + kSystemPool);
            } else {
                unassigned.push_back(label);
            }
        }
    }
    if (!unassigned.empty()) {
        std::string msg = "tasks without pool assignment:";
        for (const auto& t : unassigned) msg += " '" + t + "'";
        throw AssemblyError(msg, std::move(unassigned));
    }

    for (NodeId split : model.nodes_of_kind(NodeKind::xor_split)) {
        auto it = branching.splits.find(split);
        if (it == branching.splits.end())
            throw AssemblyError("xor split #" + std::to_string(split) + " has no branching probabilities");
        double total = 0.0;
        for (EdgeId e : model.outgoing(split)) {
            auto p = it->second.find(e);
            if (p == it->second.end() || !(p->second >= 0.0))
                throw AssemblyError("xor split #" + std::to_string(split) + " lacks a probability for edge #" +
                                    std::to_string(e));
            total += p->second;
        }
        if (it->second.size() != model.outgoing(split).size() || std::abs(total - 1.0) > 1e-9)
            throw AssemblyError("branching probabilities of xor split #" + std::to_string(split) +
                                " do not sum to 1");
    }
    for (const auto& [split, _] : branching.splits)
        if (split >= model.num_nodes() || model.node(split).kind != NodeKind::xor_split)
            throw AssemblyError("branching entry for node #" + std::to_string(split) + " which is not an xor split");

    return BpsModel{std::move(model),        std::move(branching), std::move(interarrival),
                    std::move(durations),    std::move(pools),     std::move(activity_pool),
                    max_case_length == 0 ? 1000 : max_case_length, std::move(warnings)};
}

}  // namespace ddsim
