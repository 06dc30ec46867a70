#include "ddsim/replay.hpp"

#include <deque>
#include <string>
#include <unordered_map>

namespace ddsim {
namespace {

using Marking = std::string;  // one byte per edge

struct State {
    std::size_t pos;
    Marking marking;
    std::size_t parent;
    NodeId fired;  // node fired to reach this state
    EdgeId choice; // xor_split branch / xor_join input, else npos
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

ReplayResult replay_trace(const ProcessModel& model, const Trace& trace, const ReplayOptions& options) {
    const auto acts = trace.activities();
    return replay_trace(model, std::span<const std::string>(acts), options);
}

ReplayResult replay_trace(const ProcessModel& model, std::span<const std::string> activities,
                          const ReplayOptions& options) {
    ReplayResult result;
    result.edge_traversals.assign(model.num_edges(), 0);
    const std::size_t len = activities.size();
    // More tokens on one edge than the trace could ever consume means an
    // and-split is being pumped inside a silent cycle.
    const unsigned char cap = static_cast<unsigned char>(std::min<std::size_t>(len + 2, 250));

    std::vector<NodeId> gateways;
    for (NodeId id = 0; id < model.num_nodes(); ++id)
        if (is_gateway(model.node(id).kind)) gateways.push_back(id);

    const EdgeId final_edge = model.incoming(model.end()).front();
    Marking initial(model.num_edges(), '\0');
    initial[model.outgoing(model.start()).front()] = 1;

    std::vector<State> states;
    std::unordered_map<std::string, std::size_t> best;  // key -> cost seen
    std::deque<std::pair<std::size_t, std::size_t>> queue;  // (state index, cost)

    auto key_of = [](std::size_t pos, const Marking& m) {
        std::string k = m;
        k.append(reinterpret_cast<const char*>(&pos), sizeof pos);
        return k;
    };
    auto push = [&](State s, std::size_t cost, bool front) {
        auto key = key_of(s.pos, s.marking);
        auto it = best.find(key);
        if (it != best.end() && it->second <= cost) return;
        best[std::move(key)] = cost;
        states.push_back(std::move(s));
        if (front)
            queue.emplace_front(states.size() - 1, cost);
        else
            queue.emplace_back(states.size() - 1, cost);
    };

    push(State{0, initial, npos, model.start(), npos}, 0, false);

    std::optional<std::size_t> goal;
    while (!queue.empty()) {
        const auto [si, cost] = queue.front();
        queue.pop_front();
        {
            const auto& s = states[si];
            if (best[key_of(s.pos, s.marking)] < cost) continue;
            if (s.pos == len) {
                bool done = s.marking[final_edge] == 1;
                for (std::size_t e = 0; done && e < s.marking.size(); ++e)
                    if (e != final_edge && s.marking[e] != 0) done = false;
                if (done) {
                    goal = si;
                    break;
                }
            }
        }
        if (states.size() > options.max_states) break;

        const std::size_t pos = states[si].pos;
        const Marking marking = states[si].marking;

        if (pos < len) {
            for (NodeId t : model.tasks_with_label(activities[pos])) {
                const EdgeId in = model.incoming(t).front();
                if (marking[in] == 0) continue;
                const EdgeId out = model.outgoing(t).front();
                if (static_cast<unsigned char>(marking[out]) >= cap) continue;
                Marking m = marking;
                --m[in];
                ++m[out];
                push(State{pos + 1, std::move(m), si, t, npos}, cost, true);
            }
        }

        for (NodeId g : gateways) {
            const auto& ins = model.incoming(g);
            const auto& outs = model.outgoing(g);
            switch (model.node(g).kind) {
            case NodeKind::xor_split:
                if (marking[ins[0]] == 0) break;
                for (EdgeId o : outs) {
                    if (static_cast<unsigned char>(marking[o]) >= cap) continue;
                    Marking m = marking;
                    --m[ins[0]];
                    ++m[o];
                    push(State{pos, std::move(m), si, g, o}, cost + 1, false);
                }
                break;
            case NodeKind::xor_join:
                if (static_cast<unsigned char>(marking[outs[0]]) >= cap) break;
                for (EdgeId i : ins) {
                    if (marking[i] == 0) continue;
                    Marking m = marking;
                    --m[i];
                    ++m[outs[0]];
                    push(State{pos, std::move(m), si, g, i}, cost + 1, false);
                }
                break;
            case NodeKind::and_split: {
                if (marking[ins[0]] == 0) break;
                bool ok = true;
                for (EdgeId o : outs) ok = ok && static_cast<unsigned char>(marking[o]) < cap;
                if (!ok) break;
                Marking m = marking;
                --m[ins[0]];
                for (EdgeId o : outs) ++m[o];
                push(State{pos, std::move(m), si, g, npos}, cost + 1, false);
                break;
            }
            case NodeKind::and_join: {
                bool ok = static_cast<unsigned char>(marking[outs[0]]) < cap;
                for (EdgeId i : ins) ok = ok && marking[i] != 0;
                if (!ok) break;
                Marking m = marking;
                for (EdgeId i : ins) --m[i];
                ++m[outs[0]];
                push(State{pos, std::move(m), si, g, npos}, cost + 1, false);
                break;
            }
            default:
                break;
            }
        }
    }

    if (!goal) return result;

    result.fits = true;
    for (std::size_t si = *goal; si != npos; si = states[si].parent) {
        const auto& s = states[si];
        const auto& node = model.node(s.fired);
        switch (node.kind) {
        case NodeKind::xor_split:
            ++result.edge_traversals[s.choice];
            break;
        default:
            for (EdgeId o : model.outgoing(s.fired)) ++result.edge_traversals[o];
            break;
        }
    }
    return result;
}

}  // namespace ddsim
