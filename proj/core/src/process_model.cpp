#include "ddsim/process_model.hpp"

#include "ddsim/errors.hpp"

#include <array>

namespace ddsim {
namespace {

constexpr std::array<std::pair<NodeKind, std::string_view>, 7> kKindNames{{
    {NodeKind::start, "start"},
    {NodeKind::end, "end"},
    {NodeKind::task, "task"},
    {NodeKind::xor_split, "xor_split"},
    {NodeKind::xor_join, "xor_join"},
    {NodeKind::and_split, "and_split"},
    {NodeKind::and_join, "and_join"},
}};

std::string describe(const std::vector<Node>& nodes, NodeId id) {
    const auto& n = nodes[id];
    std::string s = std::string(to_string(n.kind)) + " #" + std::to_string(id);
    if (!n.label.empty()) s += " '" + n.label + "'";
    return s;
}

std::vector<bool> reach(std::size_t n, NodeId from, const std::vector<std::vector<EdgeId>>& adj,
                        const std::vector<Edge>& edges, bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (EdgeId e : adj[u]) {
            const NodeId v = forward ? edges[e].target : edges[e].source;
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

std::string_view to_string(NodeKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<NodeKind> node_kind_from_string(std::string_view name) {
    for (const auto& [k, n] : kKindNames)
        if (n == name) return k;
    return std::nullopt;
}

bool is_gateway(NodeKind kind) {
    return kind == NodeKind::xor_split || kind == NodeKind::xor_join ||
           kind == NodeKind::and_split || kind == NodeKind::and_join;
}

ProcessModel::ProcessModel(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    const std::size_t n = nodes_.size();
    in_.assign(n, {});
    out_.assign(n, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto& edge = edges_[e];
        if (edge.source >= n || edge.target >= n)
            throw ModelError("edge #" + std::to_string(e) + " references a missing node");
        out_[edge.source].push_back(e);
        in_[edge.target].push_back(e);
    }

    std::optional<NodeId> start, end;
    for (NodeId id = 0; id < n; ++id) {
        const auto& node = nodes_[id];
        const std::size_t ins = in_[id].size(), outs = out_[id].size();
        auto fail = [&](const std::string& why) { throw ModelError(describe(nodes_, id) + ": " + why); };
        switch (node.kind) {
        case NodeKind::start:
            if (start) fail("second start node");
            if (ins != 0 || outs != 1) fail("start needs no incoming and one outgoing edge");
            start = id;
            break;
        case NodeKind::end:
            if (end) fail("second end node");
            if (ins != 1 || outs != 0) fail("end needs one incoming and no outgoing edge");
            end = id;
            break;
        case NodeKind::task:
            if (node.label.empty()) fail("task without label");
            if (ins != 1 || outs != 1) fail("task needs exactly one incoming and one outgoing edge");
            by_label_[node.label].push_back(id);
            break;
        case NodeKind::xor_split:
        case NodeKind::and_split:
            if (ins != 1 || outs < 2) fail("split needs one incoming and at least two outgoing edges");
            break;
        case NodeKind::xor_join:
        case NodeKind::and_join:
            if (ins < 2 || outs != 1) fail("join needs at least two incoming and one outgoing edge");
            break;
        }
    }
    if (!start) throw ModelError("model has no start node");
    if (!end) throw ModelError("model has no end node");
    start_ = *start;
    end_ = *end;

    const auto fwd = reach(n, start_, out_, edges_, true);
    const auto bwd = reach(n, end_, in_, edges_, false);
    for (NodeId id = 0; id < n; ++id)
        if (!fwd[id] || !bwd[id])
            throw ModelError(describe(nodes_, id) + " is not on a path from start to end");
}

std::vector<NodeId> ProcessModel::nodes_of_kind(NodeKind kind) const {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < nodes_.size(); ++id)
        if (nodes_[id].kind == kind) out.push_back(id);
    return out;
}

std::vector<NodeId> ProcessModel::tasks() const { return nodes_of_kind(NodeKind::task); }

const std::vector<NodeId>& ProcessModel::tasks_with_label(const std::string& label) const {
    static const std::vector<NodeId> none;
    auto it = by_label_.find(label);
    return it == by_label_.end() ? none : it->second;
}

std::vector<std::string> ProcessModel::task_labels() const {
    std::vector<std::string> out;
    out.reserve(by_label_.size());
    for (const auto& [label, ids] : by_label_) out.push_back(label);
    return out;
}

NodeId ProcessModelBuilder::add(NodeKind kind, std::string label) {
    nodes_.push_back({kind, std::move(label)});
    return nodes_.size() - 1;
}

EdgeId ProcessModelBuilder::connect(NodeId from, NodeId to) {
    edges_.push_back({from, to});
    return edges_.size() - 1;
}

}  // namespace ddsim
