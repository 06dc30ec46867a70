#pragma once

#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace ddsim {

/// Directly-follows counts including the artificial start and end markers.
struct DirectlyFollowsGraph {
    static inline const std::string kStart = "\x02start";
    static inline const std::string kEnd = "\x03end";

    std::map<std::pair<std::string, std::string>, std::size_t> arc_counts;

    std::size_t count(const std::string& from, const std::string& to) const;
};

DirectlyFollowsGraph build_dfg(const EventLog& log);

struct DiscoveryOptions {
    /// Arc filter: an arc survives when its count reaches the eta-quantile of
    /// all non-concurrent arc counts (0 keeps everything).
    double eta = 0.0;
    /// Concurrency gate: A || B iff both AB and BA were observed and
    /// |AB - BA| / (AB + BA) < 1 - epsilon.
    double epsilon = 0.0;
};

/// Activity pairs judged concurrent under the epsilon gate.
std::set<std::pair<std::string, std::string>> gated_concurrency(const DirectlyFollowsGraph& dfg,
                                                                double epsilon);

/// Directly-follows based discovery:
///  1. build the DFG and detect concurrent pairs (gated by epsilon);
///  2. drop arcs between concurrent activities, filter the rest by eta;
///  3. re-add the heaviest dropped arcs until every activity is reachable from
///     start and reaches end;
///  4. turn every fan-out / fan-in into a gateway tree. Targets that split into
///     groups with all cross-group pairs concurrent get an and-gateway over the
///     groups; groups with no cross-group concurrency get an xor-gateway. The
///     decomposition recurses, and irreducible sets fall back to xor.
///
/// Every activity of the log becomes exactly one task. Throws ArgumentError for
/// parameters outside [0, 1], EmptyInputError for an empty log and
/// EmptyModelError when no activity survives.
ProcessModel discover_model(const EventLog& log, const DiscoveryOptions& options = {});

inline ProcessModel discover_model(const EventLog& log, double eta, double epsilon) {
    return discover_model(log, DiscoveryOptions{eta, epsilon});
}

}  // namespace ddsim
