#include "ddsim/resource_pools.hpp"

#include "ddsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ddsim {

double profile_correlation(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t k = a.size();
    const double n = static_cast<double>(k);
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa > 0.0 && sbb > 0.0) return sab / std::sqrt(saa * sbb);
    const double ta = ma * n, tb = mb * n;
    if (ta == 0.0 || tb == 0.0) return 0.0;
    for (std::size_t i = 0; i < k; ++i)
        if (std::abs(a[i] / ta - b[i] / tb) > 1e-12) return 0.0;
    return 1.0;
}

PoolDiscovery discover_resource_pools(const EventLog& log, double similarity_threshold) {
    if (!(similarity_threshold >= 0.0 && similarity_threshold <= 1.0))
        throw ArgumentError("pool similarity threshold must lie in [0, 1]");

    const std::vector<std::string> activities(log.activity_alphabet().begin(), log.activity_alphabet().end());
    const std::vector<std::string> resources(log.resource_alphabet().begin(), log.resource_alphabet().end());
    std::map<std::string, std::size_t> act_idx, res_idx;
    for (std::size_t i = 0; i < activities.size(); ++i) act_idx[activities[i]] = i;
    for (std::size_t i = 0; i < resources.size(); ++i) res_idx[resources[i]] = i;

    std::vector<std::vector<double>> profile(resources.size(), std::vector<double>(activities.size(), 0.0));
    std::vector<double> system_counts(activities.size(), 0.0);
    bool any_system = false;
    for (const auto& t : log.traces())
        for (const auto& e : t.events()) {
            const auto a = act_idx.at(e.activity);
            if (e.resource.empty()) {
                system_counts[a] += 1.0;
                any_system = true;
            } else {
                profile[res_idx.at(e.resource)][a] += 1.0;
            }
        }

    const std::size_t r = resources.size();
    std::vector<std::vector<double>> corr(r, std::vector<double>(r, 1.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) corr[i][j] = corr[j][i] = profile_correlation(profile[i], profile[j]);

    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < r; ++i) clusters.push_back({i});
    auto linkage = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
        double s = 0.0;
        for (auto i : x)
            for (auto j : y) s += corr[i][j];
        return s / static_cast<double>(x.size() * y.size());
    };
    for (;;) {
        double best = -2.0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const double l = linkage(clusters[i], clusters[j]);
                if (l > best) {
                    best = l;
                    bi = i;
                    bj = j;
                }
            }
        if (clusters.size() < 2 || best < similarity_threshold) break;
        clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
        std::sort(clusters[bi].begin(), clusters[bi].end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

    PoolDiscovery out;
    std::vector<std::vector<double>> pool_counts;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        ResourcePool pool{"pool_" + std::to_string(c + 1), {}};
        std::vector<double> counts(activities.size(), 0.0);
        for (auto i : clusters[c]) {
            pool.resources.insert(resources[i]);
            for (std::size_t a = 0; a < activities.size(); ++a) counts[a] += profile[i][a];
        }
        out.pools.push_back(std::move(pool));
        pool_counts.push_back(std::move(counts));
    }
    if (any_system || resources.empty()) {
        out.pools.push_back({kSystemPool, {kSystemPool}});
        pool_counts.push_back(system_counts);
    }

    for (std::size_t a = 0; a < activities.size(); ++a) {
        std::size_t best = 0;
        for (std::size_t p = 1; p < out.pools.size(); ++p)
            if (pool_counts[p][a] > pool_counts[best][a]) best = p;
        out.activity_pool[activities[a]] = out.pools[best].id;
    }
    return out;
}

}  // namespace ddsim
