#pragma once

#include "ddsim/event_log.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ddsim {

inline const std::string kSystemPool = "SYSTEM";

struct ResourcePool {
    std::string id;
    std::set<std::string> resources;

    std::size_t size() const noexcept { return resources.size(); }
    friend bool operator==(const ResourcePool&, const ResourcePool&) = default;
};

struct PoolDiscovery {
    std::vector<ResourcePool> pools;
    std::map<std::string, std::string> activity_pool;  // activity -> pool id
};

/// Pearson correlation of two activity-count profiles. When either profile has
/// zero variance the result is 1 for proportional profiles and 0 otherwise.
double profile_correlation(const std::vector<double>& a, const std::vector<double>& b);

/// Correlation clustering of resources over their activity-count profiles:
/// average-linkage agglomeration, always merging the most correlated pair of
/// clusters while that correlation is >= `similarity_threshold`. Pools are
/// named pool_1, pool_2, ... in order of their smallest member. Events without
/// a resource belong to the synthetic pool SYSTEM (single member "SYSTEM").
/// Each activity is assigned to the pool whose members executed it most
/// often; ties go to the pool listed first.
PoolDiscovery discover_resource_pools(const EventLog& log, double similarity_threshold = 0.7);

}  // namespace ddsim
