#pragma once

// Hand-built logs and models shared by the test binaries.

#include "ddsim/bps_model.hpp"
#include "ddsim/event_log.hpp"
#include "ddsim/process_model.hpp"
#include "ddsim/random.hpp"
#include "ddsim/time.hpp"

#include <cmath>
#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

using namespace ddsim;

inline Timestamp at(double seconds) { return Timestamp{} + from_seconds(seconds); }

inline Event event(const std::string& c, const std::string& a, double start, double end, const std::string& r = "") {
    return Event{c, a, r, at(start), at(end)};
}

// (activity, resource, start s, end s)
using Row = std::tuple<std::string, std::string, double, double>;

inline Trace trace(const std::string& c, const std::vector<Row>& rows) {
    std::vector<Event> evs;
    for (const auto& [a, r, s, e] : rows) evs.push_back(event(c, a, s, e, r));
    return Trace(c, std::move(evs));
}

// One trace per variant, events one minute long and back to back; trace i
// starts at i hours.
inline EventLog sequence_log(const std::vector<std::vector<std::string>>& variants) {
    std::vector<Trace> ts;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        std::vector<Row> rows;
        double t = 3600.0 * static_cast<double>(i);
        for (const auto& a : variants[i]) {
            rows.emplace_back(a, "r_" + a, t, t + 60.0);
            t += 60.0;
        }
        ts.push_back(trace("c" + std::to_string(1000 + i), rows));
    }
    return EventLog(std::move(ts));
}

inline std::vector<std::vector<std::string>> repeat(const std::vector<std::string>& v, std::size_t n) {
    return std::vector<std::vector<std::string>>(n, v);
}

// Random log: traces of 1..max_len activities over `alphabet_size` labels,
// random waits and durations, a few resources.
inline EventLog random_log(std::uint64_t seed, std::size_t traces, std::size_t alphabet_size = 5,
                           std::size_t max_len = 6) {
    Rng rng(seed);
    std::vector<Trace> ts;
    for (std::size_t i = 0; i < traces; ++i) {
        const auto c = "case" + std::to_string(i);
        std::vector<Row> rows;
        double t = rng.uniform() * 86400.0;
        const auto len = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_len));
        for (std::size_t k = 0; k < len; ++k) {
            const auto a = static_cast<char>('A' + static_cast<int>(rng.uniform() * static_cast<double>(alphabet_size)));
            t += std::floor(rng.uniform() * 600.0);
            const double d = std::floor(rng.uniform() * 3600.0);
            rows.emplace_back(std::string(1, a), "res" + std::to_string(static_cast<int>(rng.uniform() * 3)), t, t + d);
            t += d;
        }
        ts.push_back(trace(c, rows));
    }
    return EventLog(std::move(ts));
}

struct BuiltModel {
    BpsModel model;
    NodeId xor_split = 0;
    EdgeId first_branch = 0;   // probability p_first
    EdgeId second_branch = 0;
};

// start -> A -> xor(B | C) -> and(D, E) -> end, exponential durations, one
// pool per task.
inline BuiltModel two_gateway_model(double p_first = 0.3, double interarrival_mean = 600.0,
                                    std::size_t pool_size = 2) {
    ProcessModelBuilder b;
    const auto s = b.add_start();
    const auto a = b.add_task("A");
    const auto xs = b.add_gateway(NodeKind::xor_split);
    const auto tb = b.add_task("B");
    const auto tc = b.add_task("C");
    const auto xj = b.add_gateway(NodeKind::xor_join);
    const auto as = b.add_gateway(NodeKind::and_split);
    const auto td = b.add_task("D");
    const auto te = b.add_task("E");
    const auto aj = b.add_gateway(NodeKind::and_join);
    const auto e = b.add_end();
    b.connect(s, a);
    b.connect(a, xs);
    const auto e1 = b.connect(xs, tb);
    const auto e2 = b.connect(xs, tc);
    b.connect(tb, xj);
    b.connect(tc, xj);
    b.connect(xj, as);
    b.connect(as, td);
    b.connect(as, te);
    b.connect(td, aj);
    b.connect(te, aj);
    b.connect(aj, e);
    auto pm = b.build();

    BranchingProbabilities br;
    br.splits[xs] = {{e1, p_first}, {e2, 1.0 - p_first}};
    std::map<std::string, DistributionSpec> durations{
        {"A", DistributionSpec::exponential(300)},  {"B", DistributionSpec::exponential(600)},
        {"C", DistributionSpec::exponential(200)},  {"D", DistributionSpec::exponential(400)},
        {"E", DistributionSpec::exponential(250)}};
    std::vector<ResourcePool> pools;
    std::map<std::string, std::string> activity_pool;
    for (const std::string t : {"A", "B", "C", "D", "E"}) {
        ResourcePool p{"pool_" + t, {}};
        for (std::size_t k = 0; k < pool_size; ++k) p.resources.insert(t + "_res" + std::to_string(k + 1));
        pools.push_back(p);
        activity_pool[t] = p.id;
    }
    auto model = assemble_bps_model(std::move(pm), std::move(br), DistributionSpec::exponential(interarrival_mean),
                                    std::move(durations), std::move(pools), std::move(activity_pool));
    return {std::move(model), xs, e1, e2};
}

// One task of fixed duration served by a single resource.
inline BpsModel single_task_model(double duration, double interarrival, std::size_t pool_size = 1) {
    ProcessModelBuilder b;
    const auto s = b.add_start();
    const auto t = b.add_task("T");
    const auto e = b.add_end();
    b.connect(s, t);
    b.connect(t, e);
    ResourcePool pool{"pool_T", {}};
    for (std::size_t k = 0; k < pool_size; ++k) pool.resources.insert("worker" + std::to_string(k + 1));
    return assemble_bps_model(b.build(), {}, DistributionSpec::fixed(interarrival),
                              {{"T", DistributionSpec::fixed(duration)}}, {pool}, {{"T", "pool_T"}});
}

}  // namespace fixtures
