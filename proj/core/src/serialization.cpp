#include "ddsim/serialization.hpp"

#include "ddsim/errors.hpp"
#include "json_codec.hpp"

#include <fstream>
#include <sstream>

namespace ddsim {
namespace json_codec {

ordered_json encode(const ProcessModel& model) {
    ordered_json nodes = ordered_json::array();
    for (NodeId id = 0; id < model.num_nodes(); ++id) {
        const auto& n = model.node(id);
        ordered_json jn{{"id", id}, {"kind", std::string(to_string(n.kind))}};
        if (n.kind == NodeKind::task) jn["label"] = n.label;
        nodes.push_back(std::move(jn));
    }
    ordered_json edges = ordered_json::array();
    for (EdgeId id = 0; id < model.num_edges(); ++id) {
        const auto& e = model.edge(id);
        edges.push_back({{"id", id}, {"source", e.source}, {"target", e.target}});
    }
    return ordered_json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

ProcessModel decode_process_model(const json& j) {
    std::vector<Node> nodes;
    for (const auto& jn : j.at("nodes")) {
        if (jn.at("id").get<std::size_t>() != nodes.size())
            throw ModelError("process model node ids must be consecutive from 0");
        const auto kind_name = jn.at("kind").get<std::string>();
        const auto kind = node_kind_from_string(kind_name);
        if (!kind) throw ModelError("unknown node kind '" + kind_name + "'");
        nodes.push_back({*kind, jn.value("label", std::string{})});
    }
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
        if (je.at("id").get<std::size_t>() != edges.size())
            throw ModelError("process model edge ids must be consecutive from 0");
        edges.push_back({je.at("source").get<NodeId>(), je.at("target").get<NodeId>()});
    }
    return ProcessModel(std::move(nodes), std::move(edges));
}

ordered_json encode(const DistributionSpec& spec) {
    return ordered_json{{"family", std::string(to_string(spec.family))},
                        {"params", spec.params},
                        {"fit_error", spec.fit_error}};
}

DistributionSpec decode_distribution(const json& j) {
    const auto name = j.at("family").get<std::string>();
    const auto family = family_from_string(name);
    if (!family) throw ArgumentError("unknown distribution family '" + name + "'");
    DistributionSpec s{*family, j.at("params").get<std::vector<double>>(), j.value("fit_error", 0.0)};
    s.validate();
    return s;
}

ordered_json encode(const BpsModel& m) {
    ordered_json branching = ordered_json::array();
    for (const auto& [split, probs] : m.branching.splits) {
        ordered_json branches = ordered_json::array();
        for (const auto& [edge, p] : probs) branches.push_back({{"edge", edge}, {"probability", p}});
        branching.push_back(
            {{"split", split}, {"fallback", m.branching.fallback.count(split) > 0}, {"branches", std::move(branches)}});
    }
    ordered_json durations = ordered_json::object();
    for (const auto& [label, spec] : m.activity_durations) durations[label] = encode(spec);
    ordered_json pools = ordered_json::array();
    for (const auto& p : m.pools) pools.push_back({{"id", p.id}, {"resources", p.resources}});
    ordered_json assignment = ordered_json::object();
    for (const auto& [label, pool] : m.activity_pool) assignment[label] = pool;

    return ordered_json{{"format", "ddsim.bps_model"},
                        {"version", 1},
                        {"process_model", encode(m.process_model)},
                        {"branching", std::move(branching)},
                        {"interarrival", encode(m.interarrival)},
                        {"activity_durations", std::move(durations)},
                        {"pools", std::move(pools)},
                        {"activity_pool", std::move(assignment)},
                        {"max_case_length", m.max_case_length},
                        {"warnings", m.warnings}};
}

BpsModel decode_bps_model(const json& j) {
    if (j.value("format", std::string{}) != "ddsim.bps_model")
        throw IoError("document is not a ddsim.bps_model");
    ProcessModel model = decode_process_model(j.at("process_model"));
    BranchingProbabilities branching;
    for (const auto& js : j.at("branching")) {
        const auto split = js.at("split").get<NodeId>();
        auto& probs = branching.splits[split];
        for (const auto& jb : js.at("branches"))
            probs[jb.at("edge").get<EdgeId>()] = jb.at("probability").get<double>();
        if (js.value("fallback", false)) branching.fallback.insert(split);
    }
    std::map<std::string, DistributionSpec> durations;
    for (const auto& [label, spec] : j.at("activity_durations").items()) durations.emplace(label, decode_distribution(spec));
    std::vector<ResourcePool> pools;
    for (const auto& jp : j.at("pools"))
        pools.push_back({jp.at("id").get<std::string>(), jp.at("resources").get<std::set<std::string>>()});
    auto assignment = j.at("activity_pool").get<std::map<std::string, std::string>>();

    BpsModel m = assemble_bps_model(std::move(model), std::move(branching), decode_distribution(j.at("interarrival")),
                                    std::move(durations), std::move(pools), std::move(assignment),
                                    j.value("max_case_length", std::size_t{1000}));
    m.warnings = j.value("warnings", std::vector<std::string>{});
    return m;
}

}  // namespace json_codec

namespace {

template <class F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed JSON document: ") + e.what());
    }
}

}  // namespace

std::string process_model_to_json(const ProcessModel& model, int indent) {
    return json_codec::encode(model).dump(indent);
}

ProcessModel process_model_from_json(const std::string& text) {
    return guarded([&] { return json_codec::decode_process_model(nlohmann::json::parse(text)); });
}

std::string distribution_to_json(const DistributionSpec& spec, int indent) {
    return json_codec::encode(spec).dump(indent);
}

DistributionSpec distribution_from_json(const std::string& text) {
    return guarded([&] { return json_codec::decode_distribution(nlohmann::json::parse(text)); });
}

std::string bps_model_to_json(const BpsModel& model, int indent) { return json_codec::encode(model).dump(indent); }

BpsModel bps_model_from_json(const std::string& text) {
    return guarded([&] { return json_codec::decode_bps_model(nlohmann::json::parse(text)); });
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void save_bps_model(const BpsModel& model, const std::filesystem::path& path) {
    write_text_file(path, bps_model_to_json(model) + "\n");
}

BpsModel load_bps_model(const std::filesystem::path& path) { return bps_model_from_json(read_text_file(path)); }

}  // namespace ddsim
