#include "ddsim/metrics.hpp"

#include "ddsim/edit_distance.hpp"
#include "ddsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

namespace ddsim {
namespace {

struct EncodedTrace {
    std::vector<int> labels;
    std::vector<double> proc;
    std::vector<double> wait;
};

EncodedTrace encode(const Trace& t, Alphabet& alphabet) {
    EncodedTrace e;
    e.wait = waiting_times(t);
    for (const auto& ev : t.events()) {
        e.labels.push_back(alphabet.intern(ev.activity));
        e.proc.push_back(to_seconds(ev.duration()));
    }
    return e;
}

std::vector<EncodedTrace> encode(const EventLog& log, Alphabet& alphabet) {
    std::vector<EncodedTrace> out;
    out.reserve(log.size());
    for (const auto& t : log.traces()) out.push_back(encode(t, alphabet));
    return out;
}

double cf_encoded(const EncodedTrace& a, const EncodedTrace& b, std::size_t alpha, const ConcurrencyMatrix& conc) {
    const auto len = std::max(a.labels.size(), b.labels.size());
    if (len == 0) return 0.0;
    return dl_distance(a.labels, b.labels, alpha, conc) / static_cast<double>(len);
}

double bptd_encoded(const EncodedTrace& a, const EncodedTrace& b, std::size_t alpha, const ConcurrencyMatrix& conc,
                    const TimeScale& scale, const BptdWeights& w) {
    const auto len = std::max(a.labels.size(), b.labels.size());
    if (len == 0) return 0.0;
    auto match = [&](std::size_t i, std::size_t j) {
        double c = 0.0;
        if (scale.max_processing > 0) c += w.processing * std::abs(a.proc[i] - b.proc[j]) / scale.max_processing;
        if (scale.max_waiting > 0) c += w.waiting * std::abs(a.wait[i] - b.wait[j]) / scale.max_waiting;
        return c;
    };
    auto swap = [&](std::size_t k, std::size_t i, std::size_t l, std::size_t j) {
        const double base = conc(a.labels[k], a.labels[i]) ? 0.0 : 1.0;
        return base + match(k, j) + match(i, l);
    };
    const double d = detail::lowrance_wagner(a.labels, b.labels, alpha, match, swap);
    return std::min(1.0, d / static_cast<double>(len));
}

// Fills a gen x truth matrix; rows are split across threads.
template <class Cell>
CostMatrix build_matrix(std::size_t rows, std::size_t cols, Cell&& cell) {
    CostMatrix m(rows, cols);
    const std::size_t work = rows * cols;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    if (work < 4096) threads = 1;
    threads = std::min(threads, rows);
    if (threads <= 1) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = cell(i, j);
        return m;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < rows; i += threads)
                for (std::size_t j = 0; j < cols; ++j) m(i, j) = cell(i, j);
        });
    }
    pool.clear();
    return m;
}

void require_non_empty(const EventLog& gen, const EventLog& truth) {
    if (gen.empty() || truth.empty()) throw EmptyInputError("cannot compare an empty log");
}

double mean_pair_cost(const CostMatrix& m) {
    const auto p = pair_traces(m);
    return p.pairs.empty() ? 0.0 : p.total_cost / static_cast<double>(p.pairs.size());
}

struct Prepared {
    Alphabet alphabet;
    ConcurrencyMatrix conc;
    std::vector<EncodedTrace> gen;
    std::vector<EncodedTrace> truth;
};

Prepared prepare(const EventLog& gen, const EventLog& truth) {
    Prepared p;
    p.truth = encode(truth, p.alphabet);
    p.gen = encode(gen, p.alphabet);
    p.conc = ConcurrencyMatrix(discover_concurrency(truth), p.alphabet);
    return p;
}

double cfls_prepared(const Prepared& p) {
    const auto alpha = p.alphabet.size();
    const auto m = build_matrix(p.gen.size(), p.truth.size(), [&](std::size_t i, std::size_t j) {
        return cf_encoded(p.gen[i], p.truth[j], alpha, p.conc);
    });
    return 1.0 - mean_pair_cost(m);
}

double els_prepared(const Prepared& p, const TimeScale& scale, const BptdWeights& w) {
    const auto alpha = p.alphabet.size();
    const auto m = build_matrix(p.gen.size(), p.truth.size(), [&](std::size_t i, std::size_t j) {
        return bptd_encoded(p.gen[i], p.truth[j], alpha, p.conc, scale, w);
    });
    return 1.0 - mean_pair_cost(m);
}

std::map<std::string, double> mean_durations(const EventLog& log) {
    std::map<std::string, std::pair<double, std::size_t>> acc;
    for (const auto& t : log.traces())
        for (const auto& e : t.events()) {
            auto& [sum, n] = acc[e.activity];
            sum += to_seconds(e.duration());
            ++n;
        }
    std::map<std::string, double> out;
    for (const auto& [a, sn] : acc) out[a] = sn.first / static_cast<double>(sn.second);
    return out;
}

}  // namespace

Pairing pair_traces(const CostMatrix& cost) {
    Pairing p;
    const auto a = solve_assignment(cost);
    p.pairs = a.pairs;
    p.total_cost = a.total_cost;
    std::vector<char> used_r(cost.rows(), 0), used_c(cost.cols(), 0);
    for (const auto& [r, c] : p.pairs) {
        used_r[r] = 1;
        used_c[c] = 1;
    }
    for (std::size_t r = 0; r < cost.rows(); ++r)
        if (!used_r[r]) p.unmatched_generated.push_back(r);
    for (std::size_t c = 0; c < cost.cols(); ++c)
        if (!used_c[c]) p.unmatched_truth.push_back(c);
    return p;
}

Pairing pair_traces(const EventLog& gen, const EventLog& truth, const TraceCost& cost) {
    const auto m = build_matrix(gen.size(), truth.size(),
                                [&](std::size_t i, std::size_t j) { return cost(gen[i], truth[j]); });
    return pair_traces(m);
}

std::vector<double> waiting_times(const Trace& trace) {
    std::vector<double> w;
    w.reserve(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i == 0) {
            w.push_back(0.0);
            continue;
        }
        w.push_back(std::max(0.0, to_seconds(trace[i].start - trace[i - 1].end)));
    }
    return w;
}

TimeScale time_scale(const EventLog& a, const EventLog& b) {
    TimeScale s;
    for (const auto* log : {&a, &b})
        for (const auto& t : log->traces()) {
            const auto w = waiting_times(t);
            for (std::size_t i = 0; i < t.size(); ++i) {
                s.max_processing = std::max(s.max_processing, to_seconds(t[i].duration()));
                s.max_waiting = std::max(s.max_waiting, w[i]);
            }
        }
    return s;
}

double bptd(const Trace& a, const Trace& b, const ConcurrencyRelation& concurrent, const TimeScale& scale,
            const BptdWeights& weights) {
    Alphabet alphabet;
    const auto ea = encode(a, alphabet);
    const auto eb = encode(b, alphabet);
    const ConcurrencyMatrix conc(concurrent, alphabet);
    return bptd_encoded(ea, eb, alphabet.size(), conc, scale, weights);
}

double cfls(const EventLog& gen, const EventLog& truth) {
    require_non_empty(gen, truth);
    return cfls_prepared(prepare(gen, truth));
}

double els(const EventLog& gen, const EventLog& truth, const BptdWeights& weights) {
    require_non_empty(gen, truth);
    return els_prepared(prepare(gen, truth), time_scale(gen, truth), weights);
}

double cycle_time_mae(const EventLog& gen, const EventLog& truth) {
    require_non_empty(gen, truth);
    std::vector<double> cg, ct;
    for (const auto& t : gen.traces()) cg.push_back(to_seconds(t.cycle_time()));
    for (const auto& t : truth.traces()) ct.push_back(to_seconds(t.cycle_time()));
    const auto m = build_matrix(cg.size(), ct.size(), [&](std::size_t i, std::size_t j) {
        return std::abs(cg[i] - ct[j]);
    });
    return mean_pair_cost(m);
}

double emd_1d(std::span<const double> h1, std::span<const double> h2) {
    if (h1.size() != h2.size()) throw ArgumentError("histograms differ in length");
    double s1 = 0.0, s2 = 0.0;
    for (double v : h1) s1 += v;
    for (double v : h2) s2 += v;
    double c1 = 0.0, c2 = 0.0, total = 0.0;
    for (std::size_t i = 0; i < h1.size(); ++i) {
        c1 += s1 > 0 ? h1[i] / s1 : 0.0;
        c2 += s2 > 0 ? h2[i] / s2 : 0.0;
        total += std::abs(c1 - c2);
    }
    return total;
}

double activity_duration_emd(const EventLog& gen, const EventLog& truth, std::size_t bins, bool normalize) {
    require_non_empty(gen, truth);
    if (bins < 2) throw ArgumentError("bins must be at least 2");
    const auto mg = mean_durations(gen);
    const auto mt = mean_durations(truth);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* m : {&mg, &mt})
        for (const auto& [a, v] : *m) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    auto histogram = [&](const std::map<std::string, double>& means) {
        std::vector<double> h(bins, 0.0);
        for (const auto& [a, v] : means) {
            std::size_t b = 0;
            if (hi > lo) {
                const double x = (v - lo) / (hi - lo) * static_cast<double>(bins);
                b = std::min(bins - 1, static_cast<std::size_t>(std::max(0.0, std::floor(x))));
            }
            h[b] += 1.0;
        }
        return h;
    };
    const double d = emd_1d(histogram(mg), histogram(mt));
    return normalize ? d / static_cast<double>(bins - 1) : d;
}

MetricReport evaluate(const EventLog& gen, const EventLog& truth, const MetricOptions& options) {
    require_non_empty(gen, truth);
    if (options.bins < 2) throw ArgumentError("bins must be at least 2");
    const auto p = prepare(gen, truth);
    MetricReport r;
    r.cfls = cfls_prepared(p);
    r.els = els_prepared(p, time_scale(gen, truth), options.weights);
    r.cycle_time_mae = cycle_time_mae(gen, truth);
    r.emd = activity_duration_emd(gen, truth, options.bins, options.normalize_emd);
    if (gen.size() > truth.size()) r.unmatched_generated = gen.size() - truth.size();
    if (truth.size() > gen.size()) r.unmatched_truth = truth.size() - gen.size();
    return r;
}

}  // namespace ddsim
