#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ddsim {

using NodeId = std::size_t;
using EdgeId = std::size_t;

enum class NodeKind { start, end, task, xor_split, xor_join, and_split, and_join };

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view name);

bool is_gateway(NodeKind kind);

struct Node {
    NodeKind kind = NodeKind::task;
    std::string label;  // tasks only

    friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
    NodeId source = 0;
    NodeId target = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// BPMN subset: one start, one end, tasks, and exclusive / parallel gateways.
///
/// Construction validates the structure and throws ModelError when
///  - there is not exactly one start (no incoming, one outgoing edge) and one
///    end (one incoming, no outgoing edge),
///  - a task does not have exactly one incoming and one outgoing edge,
///  - a split does not have one incoming and at least two outgoing edges (joins
///    mirrored),
///  - some node is not on a path from start to end.
class ProcessModel {
public:
    ProcessModel(std::vector<Node> nodes, std::vector<Edge> edges);

    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }
    std::size_t num_nodes() const noexcept { return nodes_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const std::vector<EdgeId>& incoming(NodeId id) const { return in_.at(id); }
    const std::vector<EdgeId>& outgoing(NodeId id) const { return out_.at(id); }

    NodeId start() const noexcept { return start_; }
    NodeId end() const noexcept { return end_; }

    std::vector<NodeId> tasks() const;
    std::vector<NodeId> nodes_of_kind(NodeKind kind) const;
    /// Task nodes carrying `label` (usually one).
    const std::vector<NodeId>& tasks_with_label(const std::string& label) const;
    std::vector<std::string> task_labels() const;

    friend bool operator==(const ProcessModel& a, const ProcessModel& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> in_;
    std::vector<std::vector<EdgeId>> out_;
    std::map<std::string, std::vector<NodeId>> by_label_;
    NodeId start_ = 0;
    NodeId end_ = 0;
};

/// Incremental construction for hand-built models.
class ProcessModelBuilder {
public:
    NodeId add_start() { return add(NodeKind::start, {}); }
    NodeId add_end() { return add(NodeKind::end, {}); }
    NodeId add_task(std::string label) { return add(NodeKind::task, std::move(label)); }
    NodeId add_gateway(NodeKind kind) { return add(kind, {}); }
    EdgeId connect(NodeId from, NodeId to);

    ProcessModel build() const { return ProcessModel(nodes_, edges_); }

private:
    NodeId add(NodeKind kind, std::string label);

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

}  // namespace ddsim
