#include "ddsim/discovery.hpp"

#include "ddsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>

namespace ddsim {

std::size_t DirectlyFollowsGraph::count(const std::string& from, const std::string& to) const {
    auto it = arc_counts.find({from, to});
    return it == arc_counts.end() ? 0 : it->second;
}

DirectlyFollowsGraph build_dfg(const EventLog& log) {
    DirectlyFollowsGraph g;
    for (const auto& t : log.traces()) {
        if (t.empty()) continue;
        ++g.arc_counts[{DirectlyFollowsGraph::kStart, t[0].activity}];
        for (std::size_t i = 0; i + 1 < t.size(); ++i) ++g.arc_counts[{t[i].activity, t[i + 1].activity}];
        ++g.arc_counts[{t[t.size() - 1].activity, DirectlyFollowsGraph::kEnd}];
    }
    return g;
}

std::set<std::pair<std::string, std::string>> gated_concurrency(const DirectlyFollowsGraph& dfg,
                                                                double epsilon) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [arc, ab] : dfg.arc_counts) {
        const auto& [a, b] = arc;
        if (!(a < b) || a == DirectlyFollowsGraph::kStart || b == DirectlyFollowsGraph::kEnd ||
            b == DirectlyFollowsGraph::kStart || a == DirectlyFollowsGraph::kEnd)
            continue;
        const std::size_t ba = dfg.count(b, a);
        if (ba == 0) continue;
        const double balance = std::abs(static_cast<double>(ab) - static_cast<double>(ba)) /
                               static_cast<double>(ab + ba);
        if (balance < 1.0 - epsilon) out.emplace(a, b);
    }
    return out;
}

namespace {

using Arc = std::pair<std::size_t, std::size_t>;  // indices into the label table

/// Recursive xor/and decomposition of a fan-out (or fan-in) set.
struct Block {
    enum class Kind { leaf, exclusive, parallel } kind = Kind::leaf;
    std::size_t item = 0;
    std::vector<Block> children;
};

class Decomposer {
public:
    explicit Decomposer(std::function<bool(std::size_t, std::size_t)> concurrent)
        : concurrent_(std::move(concurrent)) {}

    Block operator()(const std::vector<std::size_t>& items) const {
        if (items.size() == 1) return Block{Block::Kind::leaf, items[0], {}};
        auto groups = components(items, false);
        if (groups.size() > 1) return make(Block::Kind::parallel, groups);
        groups = components(items, true);
        if (groups.size() > 1) return make(Block::Kind::exclusive, groups);
        Block b{Block::Kind::exclusive, 0, {}};
        for (auto i : items) b.children.push_back(Block{Block::Kind::leaf, i, {}});
        return b;
    }

private:
    Block make(Block::Kind kind, const std::vector<std::vector<std::size_t>>& groups) const {
        Block b{kind, 0, {}};
        for (const auto& g : groups) b.children.push_back((*this)(g));
        return b;
    }

    // Connected components where two items are linked iff their concurrency
    // equals `linked_if_concurrent`.
    std::vector<std::vector<std::size_t>> components(const std::vector<std::size_t>& items,
                                                     bool linked_if_concurrent) const {
        std::vector<int> comp(items.size(), -1);
        int next = 0;
        for (std::size_t s = 0; s < items.size(); ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = next;
            std::vector<std::size_t> stack{s};
            while (!stack.empty()) {
                const auto u = stack.back();
                stack.pop_back();
                for (std::size_t v = 0; v < items.size(); ++v)
                    if (comp[v] < 0 && concurrent_(items[u], items[v]) == linked_if_concurrent) {
                        comp[v] = next;
                        stack.push_back(v);
                    }
            }
            ++next;
        }
        std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(next));
        for (std::size_t i = 0; i < items.size(); ++i) out[static_cast<std::size_t>(comp[i])].push_back(items[i]);
        return out;
    }

    std::function<bool(std::size_t, std::size_t)> concurrent_;
};

}  // namespace

ProcessModel discover_model(const EventLog& log, const DiscoveryOptions& options) {
    if (!(options.eta >= 0.0 && options.eta <= 1.0))
        throw ArgumentError("eta must lie in [0, 1]");
    if (!(options.epsilon >= 0.0 && options.epsilon <= 1.0))
        throw ArgumentError("epsilon must lie in [0, 1]");
    if (log.empty()) throw EmptyInputError("cannot discover a model from an empty log");
    if (log.activity_alphabet().empty()) throw EmptyModelError("log contains no activities");

    const DirectlyFollowsGraph dfg = build_dfg(log);

    // Label table: 0 = start, 1 = end, then activities in alphabetical order.
    std::vector<std::string> labels{DirectlyFollowsGraph::kStart, DirectlyFollowsGraph::kEnd};
    labels.insert(labels.end(), log.activity_alphabet().begin(), log.activity_alphabet().end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    const std::size_t n = labels.size();

    const auto conc_pairs = gated_concurrency(dfg, options.epsilon);
    std::vector<std::vector<bool>> conc(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : conc_pairs) conc[index[a]][index[b]] = conc[index[b]][index[a]] = true;

    std::map<Arc, std::size_t> all_arcs;
    for (const auto& [arc, count] : dfg.arc_counts) all_arcs[{index[arc.first], index[arc.second]}] = count;

    std::vector<std::size_t> counts;
    for (const auto& [arc, count] : all_arcs)
        if (!conc[arc.first][arc.second]) counts.push_back(count);
    std::sort(counts.begin(), counts.end());
    std::size_t threshold = 0;
    if (!counts.empty()) {
        const auto k = static_cast<std::size_t>(std::floor(options.eta * static_cast<double>(counts.size() - 1)));
        threshold = counts[k];
    }

    std::set<Arc> kept;
    for (const auto& [arc, count] : all_arcs)
        if (!conc[arc.first][arc.second] && count >= threshold) kept.insert(arc);

    // Concurrency closure: an arc into one member of a concurrent set pulls in
    // the observed arcs to its siblings, and likewise on the source side.
    // Without it the filter can feed half of a parallel block and deadlock
    // the join.
    auto close_over_concurrency = [&] {
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& [arc, count] : all_arcs) {
                const auto [a, c] = arc;
                if (kept.count(arc) || conc[a][c]) continue;
                for (std::size_t x = 0; x < n && !kept.count(arc); ++x) {
                    if ((conc[c][x] && kept.count({a, x})) || (conc[a][x] && kept.count({x, c}))) {
                        kept.insert(arc);
                        grew = true;
                    }
                }
            }
        }
    };
    close_over_concurrency();

    // Connectivity repair. Non-concurrent arcs are preferred; concurrent arcs
    // are only used when nothing else reconnects a node.
    auto repair = [&](bool forward) {
        for (;;) {
            std::vector<bool> seen(n, false);
            std::vector<std::size_t> stack{forward ? 0u : 1u};
            seen[stack.back()] = true;
            while (!stack.empty()) {
                const auto u = stack.back();
                stack.pop_back();
                for (const auto& [a, b] : kept) {
                    const auto from = forward ? a : b, to = forward ? b : a;
                    if (from == u && !seen[to]) {
                        seen[to] = true;
                        stack.push_back(to);
                    }
                }
            }
            if (std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return;
            std::optional<Arc> best;
            std::pair<int, std::size_t> best_key{-1, 0};
            for (const auto& [arc, count] : all_arcs) {
                const auto from = forward ? arc.first : arc.second, to = forward ? arc.second : arc.first;
                if (!seen[from] || seen[to] || kept.count(arc)) continue;
                const std::pair<int, std::size_t> key{conc[arc.first][arc.second] ? 0 : 1, count};
                if (key > best_key) {
                    best_key = key;
                    best = arc;
                }
            }
            if (!best) throw EmptyModelError("directly-follows graph is disconnected");
            kept.insert(*best);
        }
    };
    for (int round = 0; round < 4; ++round) {
        const auto before = kept.size();
        repair(true);
        repair(false);
        close_over_concurrency();
        if (kept.size() == before) break;
    }

    std::vector<std::vector<std::size_t>> targets(n), sources(n);
    for (const auto& [a, b] : kept) {
        targets[a].push_back(b);
        sources[b].push_back(a);
    }

    ProcessModelBuilder builder;
    std::vector<NodeId> node_of(n);
    node_of[0] = builder.add_start();
    node_of[1] = builder.add_end();
    for (std::size_t i = 2; i < n; ++i) node_of[i] = builder.add_task(labels[i]);

    const Decomposer decompose([&](std::size_t a, std::size_t b) { return conc[a][b]; });

    // split_leaf[u][v]: node whose outgoing edge carries u's token towards v.
    std::vector<std::map<std::size_t, NodeId>> split_leaf(n), join_leaf(n);

    std::function<void(const Block&, NodeId, std::map<std::size_t, NodeId>&)> build_split =
        [&](const Block& b, NodeId from, std::map<std::size_t, NodeId>& leaf) {
            if (b.kind == Block::Kind::leaf) {
                leaf[b.item] = from;
                return;
            }
            const NodeId g = builder.add_gateway(b.kind == Block::Kind::parallel ? NodeKind::and_split
                                                                                 : NodeKind::xor_split);
            builder.connect(from, g);
            for (const auto& child : b.children) build_split(child, g, leaf);
        };
    std::function<void(const Block&, NodeId, std::map<std::size_t, NodeId>&)> build_join =
        [&](const Block& b, NodeId to, std::map<std::size_t, NodeId>& leaf) {
            if (b.kind == Block::Kind::leaf) {
                leaf[b.item] = to;
                return;
            }
            const NodeId g = builder.add_gateway(b.kind == Block::Kind::parallel ? NodeKind::and_join
                                                                                 : NodeKind::xor_join);
            for (const auto& child : b.children) build_join(child, g, leaf);
            builder.connect(g, to);
        };

    for (std::size_t v = 1; v < n; ++v)
        if (!sources[v].empty()) build_join(decompose(sources[v]), node_of[v], join_leaf[v]);
    for (std::size_t u = 0; u < n; ++u)
        if (u != 1 && !targets[u].empty()) build_split(decompose(targets[u]), node_of[u], split_leaf[u]);
    for (const auto& [a, b] : kept) builder.connect(split_leaf[a].at(b), join_leaf[b].at(a));

    return builder.build();
}

}  // namespace ddsim
