#pragma once

#include "ddsim/branching.hpp"
#include "ddsim/distribution.hpp"
#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"
#include "ddsim/resource_pools.hpp"

#include <map>
#include <string>
#include <vector>

namespace ddsim {

/// A complete simulation scenario.
struct BpsModel {
    ProcessModel process_model;
    BranchingProbabilities branching;
    DistributionSpec interarrival;
    std::map<std::string, DistributionSpec> activity_durations;  // by task label
    std::vector<ResourcePool> pools;
    std::map<std::string, std::string> activity_pool;  // task label -> pool id
    /// Task executions allowed per simulated case before it is aborted.
    std::size_t max_case_length = 1000;
    std::vector<std::string> warnings;

    const ResourcePool* find_pool(const std::string& id) const;

    friend bool operator==(const BpsModel&, const BpsModel&) = default;
};

/// Inter-arrival samples (seconds) between consecutive case arrivals, a case
/// arriving at its earliest event start. Throws InsufficientDataError for fewer
/// than two traces.
std::vector<double> interarrival_samples(const EventLog& log);
DistributionSpec extract_interarrival(const EventLog& log);

/// Processing-time distribution per activity.
std::map<std::string, DistributionSpec> extract_activity_durations(const EventLog& log);

/// Checks every component and returns the assembled model.
///  - A task without duration gets fixed(0) and a warning.
///  - A task without pool falls back to SYSTEM when that pool exists;
///    otherwise AssemblyError lists the tasks.
///  - Unknown pool ids, invalid distributions and xor splits whose
///    probabilities do not cover their branches or do not sum to 1 (1e-9)
///    raise AssemblyError.
BpsModel assemble_bps_model(ProcessModel model, BranchingProbabilities branching,
                            DistributionSpec interarrival,
                            std::map<std::string, DistributionSpec> durations,
                            std::vector<ResourcePool> pools,
                            std::map<std::string, std::string> activity_pool,
                            std::size_t max_case_length = 1000);

}  // namespace ddsim
