#include "ddsim/simulator.hpp"

#include "ddsim/distribution.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/replay.hpp"
#include "json_codec.hpp"

#include <deque>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

namespace ddsim {
namespace {

constexpr std::size_t kSilentStepLimit = 100000;

struct Instance {
    std::size_t case_index;
    NodeId node;
    std::size_t pool;
    Timestamp enabled;
    Duration duration;
    Timestamp start{};
    std::string resource;
};

struct QueueEntry {
    SimEvent event;
    std::size_t instance;  // activity_end only

    bool operator>(const QueueEntry& o) const {
        return std::tie(event.time, event.kind, event.case_index, event.node, instance) >
               std::tie(o.event.time, o.event.kind, o.event.case_index, o.event.node, o.instance);
    }
};

struct CaseState {
    explicit CaseState(Rng r) : rng(r) {}
    Rng rng;
    std::vector<std::uint32_t> tokens;  // buffered at and-join inputs
    std::size_t end_tokens = 0;
    std::size_t active = 0;  // queued or running task instances
    std::size_t executed = 0;
    bool aborted = false;
    bool finished = false;
    std::vector<Event> events;
};

class Engine {
public:
    Engine(const BpsModel& model, const SimConfig& config) : model_(model), pm_(model.process_model), config_(config) {
        for (const auto& p : model_.pools) {
            pool_free_.emplace_back(p.resources.begin(), p.resources.end());
            pool_queue_.emplace_back();
        }
        for (NodeId t : pm_.tasks()) {
            const auto& label = pm_.node(t).label;
            task_pool_[t] = pool_index(model_.activity_pool.at(label));
            task_duration_[t] = &model_.activity_durations.at(label);
        }
        width_ = std::to_string(config.num_cases).size();
    }

    SimulationResult run() {
        if (config_.num_cases == 0) throw ArgumentError("num_cases must be at least 1");
        Rng arrivals = Rng::stream(config_.seed, "arrivals");
        push({SimEventKind::case_arrival, config_.start_instant, 0, pm_.start()}, 0);
        Timestamp next_arrival = config_.start_instant;

        while (!heap_.empty()) {
            const Timestamp now = heap_.top().event.time;
            while (!heap_.empty() && heap_.top().event.time == now) {
                const QueueEntry entry = heap_.top();
                heap_.pop();
                if (entry.event.kind == SimEventKind::case_arrival) {
                    const std::size_t c = entry.event.case_index;
                    if (c + 1 < config_.num_cases) {
                        next_arrival += from_seconds(sample(model_.interarrival, arrivals));
                        push({SimEventKind::case_arrival, next_arrival, c + 1, pm_.start()}, 0);
                    }
                    start_case(c, now);
                } else {
                    finish_instance(entry.instance, now);
                }
            }
            dispatch(now);
        }

        SimulationResult result;
        std::vector<Trace> traces;
        std::map<std::vector<std::string>, bool> fits;
        for (std::size_t c = 0; c < cases_.size(); ++c) {
            auto& cs = cases_[c];
            if (!cs.aborted && !(cs.finished && cs.end_tokens == 1)) abort_case(c, "did not complete");
            if (cs.aborted) continue;
            Trace trace(case_id(c), std::move(cs.events));
            const auto acts = trace.activities();
            auto it = fits.find(acts);
            if (it == fits.end())
                it = fits.emplace(acts, replay_trace(pm_, std::span<const std::string>(acts)).fits).first;
            if (!it->second) {
                abort_case(c, "trace order does not replay");
                continue;
            }
            traces.push_back(std::move(trace));
        }
        result.aborted_cases = aborted_;
        result.warnings = std::move(warnings_);
        if (aborted_ * 10 > config_.num_cases)
            throw SimulationError(std::to_string(aborted_) + " of " + std::to_string(config_.num_cases) +
                                  " cases aborted (more than 10%)");
        if (aborted_ > 0)
            result.warnings.push_back(std::to_string(aborted_) + " case(s) aborted and excluded from the log");
        result.log = EventLog(std::move(traces));
        if (config_.audit) {
            for (const auto& inst : finished_instances_) {
                const auto& cs = cases_[inst.case_index];
                if (cs.aborted) continue;
                result.audit.push_back({case_id(inst.case_index), pm_.node(inst.node).label, inst.node,
                                        model_.pools[inst.pool].id, inst.resource, inst.enabled, inst.start,
                                        inst.start + inst.duration});
            }
        }
        return result;
    }

private:
    std::size_t pool_index(const std::string& id) const {
        for (std::size_t i = 0; i < model_.pools.size(); ++i)
            if (model_.pools[i].id == id) return i;
        throw SimulationError("unknown pool '" + id + "'");
    }

    std::string case_id(std::size_t c) const {
        std::string s = std::to_string(c + 1);
        return std::string(width_ > s.size() ? width_ - s.size() : 0, '0') + s;
    }

    void push(SimEvent e, std::size_t instance) { heap_.push({e, instance}); }

    void abort_case(std::size_t c, const std::string& why) {
        auto& cs = cases_[c];
        if (cs.aborted) return;
        cs.aborted = true;
        ++aborted_;
        if (warnings_.size() < 20) warnings_.push_back("case " + case_id(c) + " aborted: " + why);
    }

    void start_case(std::size_t c, Timestamp now) {
        cases_.emplace_back(Rng::stream(config_.seed, "case", c));
        cases_.back().tokens.assign(pm_.num_edges(), 0);
        place_token(c, pm_.outgoing(pm_.start()).front(), now);
        check_done(c);
    }

    void place_token(std::size_t c, EdgeId first, Timestamp now) {
        std::deque<EdgeId> work{first};
        std::size_t steps = 0;
        while (!work.empty()) {
            auto& cs = cases_[c];
            if (cs.aborted) return;
            if (++steps > kSilentStepLimit) {
                abort_case(c, "gateway cycle without tasks");
                return;
            }
            const EdgeId e = work.front();
            work.pop_front();
            const NodeId n = pm_.edge(e).target;
            const auto& outs = pm_.outgoing(n);
            switch (pm_.node(n).kind) {
            case NodeKind::end:
                ++cs.end_tokens;
                break;
            case NodeKind::task:
                enable(c, n, now);
                break;
            case NodeKind::xor_join:
                work.push_back(outs.front());
                break;
            case NodeKind::and_split:
                for (EdgeId o : outs) work.push_back(o);
                break;
            case NodeKind::xor_split:
                work.push_back(choose_branch(n, cs.rng));
                break;
            case NodeKind::and_join: {
                ++cs.tokens[e];
                const auto& ins = pm_.incoming(n);
                bool ready = true;
                for (EdgeId i : ins) ready = ready && cs.tokens[i] > 0;
                if (ready) {
                    for (EdgeId i : ins) --cs.tokens[i];
                    work.push_back(outs.front());
                }
                break;
            }
            case NodeKind::start:
                break;
            }
        }
    }

    EdgeId choose_branch(NodeId split, Rng& rng) const {
        const auto& probs = model_.branching.splits.at(split);
        const double u = rng.uniform();
        double acc = 0.0;
        EdgeId last = probs.begin()->first;
        for (const auto& [edge, p] : probs) {
            acc += p;
            last = edge;
            if (u < acc) return edge;
        }
        return last;
    }

    void enable(std::size_t c, NodeId task, Timestamp now) {
        auto& cs = cases_[c];
        if (++cs.executed > model_.max_case_length) {
            abort_case(c, "exceeded " + std::to_string(model_.max_case_length) + " task executions");
            return;
        }
        const Duration d = from_seconds(sample(*task_duration_.at(task), cs.rng));
        const std::size_t pool = task_pool_.at(task);
        instances_.push_back({c, task, pool, now, d, {}, {}});
        pool_queue_[pool].push_back(instances_.size() - 1);
        ++cs.active;
    }

    void dispatch(Timestamp now) {
        for (std::size_t p = 0; p < pool_queue_.size(); ++p) {
            auto& queue = pool_queue_[p];
            auto& free = pool_free_[p];
            while (!queue.empty() && !free.empty()) {
                const std::size_t id = queue.front();
                queue.pop_front();
                auto& inst = instances_[id];
                if (cases_[inst.case_index].aborted) continue;
                inst.resource = *free.begin();
                free.erase(free.begin());
                inst.start = now;
                push({SimEventKind::activity_end, now + inst.duration, inst.case_index, inst.node}, id);
            }
        }
    }

    void finish_instance(std::size_t id, Timestamp now) {
        const Instance inst = instances_[id];
        pool_free_[inst.pool].insert(inst.resource);
        const std::size_t c = inst.case_index;
        auto& cs = cases_[c];
        --cs.active;
        if (cs.aborted) return;
        cs.events.push_back({case_id(c), pm_.node(inst.node).label, inst.resource, inst.start, now});
        if (config_.audit) finished_instances_.push_back(inst);
        place_token(c, pm_.outgoing(inst.node).front(), now);
        check_done(c);
    }

    void check_done(std::size_t c) {
        auto& cs = cases_[c];
        if (cs.aborted || cs.active > 0) return;
        // Nothing queued or running: the case either reached end cleanly or is stuck.
        cs.finished = true;
        bool stranded = false;
        for (auto t : cs.tokens) stranded = stranded || t > 0;
        if (cs.end_tokens != 1 || stranded) abort_case(c, cs.end_tokens > 1 ? "more than one token reached end" : "deadlock");
    }

    const BpsModel& model_;
    const ProcessModel& pm_;
    SimConfig config_;
    std::size_t width_ = 1;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> heap_;
    std::vector<CaseState> cases_;
    std::vector<Instance> instances_;
    std::vector<Instance> finished_instances_;
    std::vector<std::set<std::string>> pool_free_;
    std::vector<std::deque<std::size_t>> pool_queue_;
    std::map<NodeId, std::size_t> task_pool_;
    std::map<NodeId, const DistributionSpec*> task_duration_;
    std::size_t aborted_ = 0;
    std::vector<std::string> warnings_;
};

}  // namespace

SimulationResult simulate(const BpsModel& model, const SimConfig& config) { return Engine(model, config).run(); }

std::string audit_to_jsonl(const std::vector<AuditRecord>& audit) {
    std::string out;
    for (const auto& r : audit) {
        json_codec::ordered_json j{{"case_id", r.case_id},
                                   {"activity", r.activity},
                                   {"pool", r.pool},
                                   {"resource", r.resource},
                                   {"enabled", format_timestamp(r.enabled)},
                                   {"start", format_timestamp(r.start)},
                                   {"end", format_timestamp(r.end)}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace ddsim
