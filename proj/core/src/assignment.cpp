#include "ddsim/assignment.hpp"

#include <algorithm>
#include <limits>

namespace ddsim {
namespace {

// Shortest augmenting path with row/column potentials; requires n <= m.
// cost(i, j) is 0-based; internal arrays are 1-based with 0 as sentinel.
template <class Cost>
std::vector<std::size_t> hungarian(std::size_t n, std::size_t m, Cost&& cost) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
    std::vector<double> minv(m + 1);
    std::vector<char> used(m + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n, 0);
    for (std::size_t j = 1; j <= m; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace

Assignment solve_assignment(const CostMatrix& cost) {
    Assignment a;
    const std::size_t r = cost.rows(), c = cost.cols();
    if (r == 0 || c == 0) return a;
    if (r <= c) {
        const auto rc = hungarian(r, c, [&](std::size_t i, std::size_t j) { return cost(i, j); });
        for (std::size_t i = 0; i < r; ++i) a.pairs.emplace_back(i, rc[i]);
    } else {
        const auto cr = hungarian(c, r, [&](std::size_t i, std::size_t j) { return cost(j, i); });
        for (std::size_t j = 0; j < c; ++j) a.pairs.emplace_back(cr[j], j);
        std::sort(a.pairs.begin(), a.pairs.end());
    }
    for (const auto& [i, j] : a.pairs) a.total_cost += cost(i, j);
    return a;
}

}  // namespace ddsim
