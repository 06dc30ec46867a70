#pragma once

// Brute-force reference implementations. They share no code with the library
// and trade speed for obviousness.

#include "ddsim/assignment.hpp"
#include "ddsim/distribution.hpp"
#include "ddsim/resource_pools.hpp"
#include "ddsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace oracle {

// Breadth-first search over strings: insert, delete, substitute and swap two
// adjacent symbols, each at cost 1. Intermediate strings are capped at
// `max_len` symbols. Returns the distance to every reachable string.
inline std::unordered_map<std::string, int> edit_distances_from(const std::string& source,
                                                                const std::string& alphabet, std::size_t max_len) {
    std::unordered_map<std::string, int> dist{{source, 0}};
    std::deque<std::string> queue{source};
    auto visit = [&](const std::string& s, int d) {
        if (dist.emplace(s, d).second) queue.push_back(s);
    };
    while (!queue.empty()) {
        const std::string s = queue.front();
        queue.pop_front();
        const int d = dist[s] + 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            visit(s.substr(0, i) + s.substr(i + 1), d);
            for (char c : alphabet)
                if (c != s[i]) {
                    std::string t = s;
                    t[i] = c;
                    visit(t, d);
                }
            if (i + 1 < s.size() && s[i] != s[i + 1]) {
                std::string t = s;
                std::swap(t[i], t[i + 1]);
                visit(t, d);
            }
        }
        if (s.size() < max_len)
            for (std::size_t i = 0; i <= s.size(); ++i)
                for (char c : alphabet) visit(s.substr(0, i) + c + s.substr(i), d);
    }
    return dist;
}

// Every string over `alphabet` with length <= max_len, shortest first.
inline std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t begin = 0, len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alphabet) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

// Minimum over all injections of the smaller side into the larger one.
inline double brute_force_assignment(const ddsim::CostMatrix& m) {
    const bool transpose = m.rows() > m.cols();
    const std::size_t n = transpose ? m.cols() : m.rows();
    const std::size_t k = transpose ? m.rows() : m.cols();
    auto cost = [&](std::size_t i, std::size_t j) { return transpose ? m(j, i) : m(i, j); };
    double best = std::numeric_limits<double>::infinity();
    std::vector<char> used(k, 0);
    std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
        if (i == n) {
            best = std::min(best, acc);
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            rec(i + 1, acc + cost(i, j));
            used[j] = 0;
        }
    };
    rec(0, 0.0);
    return n == 0 ? 0.0 : best;
}

// Transportation problem between two unit-mass histograms with ground
// distance |i - j|, solved as min-cost flow by successive shortest paths
// (Bellman-Ford on the residual graph).
inline double transport_emd(std::vector<double> supply, std::vector<double> demand) {
    const double s1 = std::accumulate(supply.begin(), supply.end(), 0.0);
    const double s2 = std::accumulate(demand.begin(), demand.end(), 0.0);
    for (auto& v : supply) v = s1 > 0 ? v / s1 : 0.0;
    for (auto& v : demand) v = s2 > 0 ? v / s2 : 0.0;
    const std::size_t n = supply.size();
    // nodes: 0 source, 1..n supply bins, n+1..2n demand bins, 2n+1 sink
    const std::size_t src = 0, sink = 2 * n + 1, nodes = 2 * n + 2;
    struct Arc {
        std::size_t to;
        double cap, cost;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> g(nodes);
    auto add = [&](std::size_t u, std::size_t v, double cap, double cost) {
        g[u].push_back({v, cap, cost, g[v].size()});
        g[v].push_back({u, 0.0, -cost, g[u].size() - 1});
    };
    for (std::size_t i = 0; i < n; ++i) {
        add(src, 1 + i, supply[i], 0.0);
        add(n + 1 + i, sink, demand[i], 0.0);
        for (std::size_t j = 0; j < n; ++j)
            add(1 + i, n + 1 + j, 2.0, std::abs(static_cast<double>(i) - static_cast<double>(j)));
    }
    const double eps = 1e-15;
    double total = 0.0;
    for (;;) {
        std::vector<double> dist(nodes, std::numeric_limits<double>::infinity());
        std::vector<std::size_t> pv(nodes), pe(nodes);
        dist[src] = 0.0;
        for (std::size_t it = 0; it < nodes; ++it) {
            bool changed = false;
            for (std::size_t u = 0; u < nodes; ++u) {
                if (dist[u] == std::numeric_limits<double>::infinity()) continue;
                for (std::size_t e = 0; e < g[u].size(); ++e) {
                    const auto& a = g[u][e];
                    if (a.cap > eps && dist[u] + a.cost < dist[a.to] - 1e-12) {
                        dist[a.to] = dist[u] + a.cost;
                        pv[a.to] = u;
                        pe[a.to] = e;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (dist[sink] == std::numeric_limits<double>::infinity()) break;
        double push = std::numeric_limits<double>::infinity();
        for (std::size_t v = sink; v != src; v = pv[v]) push = std::min(push, g[pv[v]][pe[v]].cap);
        for (std::size_t v = sink; v != src; v = pv[v]) {
            auto& a = g[pv[v]][pe[v]];
            a.cap -= push;
            g[v][a.rev].cap += push;
        }
        total += push * dist[sink];
    }
    return total;
}

// Density of each family, written out from the textbook formulas.
inline double pdf(const ddsim::DistributionSpec& s, double x) {
    using F = ddsim::DistributionFamily;
    const auto& p = s.params;
    const double pi = 3.14159265358979323846;
    switch (s.family) {
        case F::fixed: return 0.0;
        case F::normal: return std::exp(-0.5 * std::pow((x - p[0]) / p[1], 2)) / (p[1] * std::sqrt(2 * pi));
        case F::exponential: return x < 0 ? 0.0 : std::exp(-x / p[0]) / p[0];
        case F::uniform: return (x < p[0] || x > p[1]) ? 0.0 : 1.0 / (p[1] - p[0]);
        case F::lognormal:
            return x <= 0 ? 0.0
                          : std::exp(-std::pow(std::log(x) - p[0], 2) / (2 * p[1] * p[1])) /
                                (x * p[1] * std::sqrt(2 * pi));
        case F::gamma:
            return x <= 0 ? 0.0
                          : std::exp((p[0] - 1) * std::log(x) - x / p[1] - std::lgamma(p[0]) - p[0] * std::log(p[1]));
        case F::triangular: {
            const double a = p[0], c = p[1], b = p[2];
            if (x < a || x > b) return 0.0;
            if (x < c) return 2 * (x - a) / ((b - a) * (c - a));
            if (x > c) return 2 * (b - x) / ((b - a) * (b - c));
            return 2 / (b - a);
        }
    }
    return 0.0;
}

// CDF by composite Simpson integration of pdf from a far-left point.
inline double cdf_by_quadrature(const ddsim::DistributionSpec& s, double x, int panels = 20000) {
    using F = ddsim::DistributionFamily;
    const auto& p = s.params;
    if (s.family == F::fixed) return x >= p[0] ? 1.0 : 0.0;
    double lo = 0.0;
    if (s.family == F::normal) lo = p[0] - 12 * p[1];
    if (s.family == F::uniform || s.family == F::triangular) lo = p[0];
    if (x <= lo) return 0.0;
    // split at kinks so Simpson sees smooth pieces
    std::vector<double> cuts{lo};
    if (s.family == F::triangular && p[1] > lo && p[1] < x) cuts.push_back(p[1]);
    if (s.family == F::uniform && p[1] < x) cuts.push_back(p[1]);
    cuts.push_back(x);
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = cuts[k], b = cuts[k + 1], h = (b - a) / panels;
        if (h <= 0) continue;
        double sum = pdf(s, a) + pdf(s, b);
        for (int i = 1; i < panels; ++i) sum += pdf(s, a + i * h) * (i % 2 ? 4.0 : 2.0);
        total += sum * h / 3.0;
    }
    return std::min(1.0, total);
}

// RMS gap between the empirical CDF and `cdf` at the sample points.
template <class Cdf>
double empirical_cdf_rmse(std::vector<double> xs, Cdf&& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t j = i;
        while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
        const double f = static_cast<double>(j + 1) / n;
        const double d = f - cdf(xs[i]);
        acc += d * d;
    }
    return std::sqrt(acc / n);
}

// Eagerness: an activity that did not start when it was enabled must have
// found every member of its pool busy during [enabled, start).
// Returns a description of the first violation, or "" when none.
inline std::string check_eagerness(const std::vector<ddsim::AuditRecord>& audit,
                                   const std::vector<ddsim::ResourcePool>& pools) {
    std::map<std::string, std::vector<std::pair<long long, long long>>> busy;
    for (const auto& r : audit)
        busy[r.resource].emplace_back(r.start.time_since_epoch().count(), r.end.time_since_epoch().count());
    for (auto& [res, iv] : busy) std::sort(iv.begin(), iv.end());
    auto covered = [&](const std::string& res, long long a, long long b) {
        // [a, b) inside the union of busy intervals of res
        long long reach = a;
        for (const auto& [s, e] : busy[res]) {
            if (s > reach) break;
            if (e > reach) reach = e;
            if (reach >= b) return true;
        }
        return reach >= b;
    };
    for (const auto& r : audit) {
        const long long en = r.enabled.time_since_epoch().count(), st = r.start.time_since_epoch().count();
        if (st < en) return "case " + r.case_id + " " + r.activity + " started before it was enabled";
        if (st == en) continue;
        const auto pool = std::find_if(pools.begin(), pools.end(), [&](const auto& p) { return p.id == r.pool; });
        if (pool == pools.end()) return "unknown pool " + r.pool;
        for (const auto& member : pool->resources)
            if (!covered(member, en, st))
                return "case " + r.case_id + " " + r.activity + " waited while " + member + " was idle";
    }
    return "";
}

// Overlapping intervals on the same resource.
inline std::string check_exclusivity(const std::vector<ddsim::AuditRecord>& audit) {
    std::map<std::string, std::vector<std::pair<long long, long long>>> busy;
    for (const auto& r : audit)
        busy[r.resource].emplace_back(r.start.time_since_epoch().count(), r.end.time_since_epoch().count());
    for (auto& [res, iv] : busy) {
        std::sort(iv.begin(), iv.end());
        for (std::size_t i = 1; i < iv.size(); ++i)
            if (iv[i].first < iv[i - 1].second) return "resource " + res + " double-booked";
    }
    return "";
}

}  // namespace oracle
