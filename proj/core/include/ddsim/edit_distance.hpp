#pragma once

#include "ddsim/log_ops.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ddsim {

/// Interns activity labels as dense integers.
class Alphabet {
public:
    int intern(const std::string& label);
    /// -1 when unknown.
    int find(const std::string& label) const;
    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(int id) const { return labels_.at(static_cast<std::size_t>(id)); }
    std::vector<int> encode(std::span<const std::string> labels);

private:
    std::map<std::string, int> ids_;
    std::vector<std::string> labels_;
};

/// Concurrency relation over interned labels.
class ConcurrencyMatrix {
public:
    ConcurrencyMatrix() = default;
    ConcurrencyMatrix(const ConcurrencyRelation& relation, Alphabet& alphabet);

    bool operator()(int a, int b) const {
        const auto n = size_;
        return a >= 0 && b >= 0 && static_cast<std::size_t>(a) < n && static_cast<std::size_t>(b) < n &&
               bits_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
    }

private:
    std::size_t size_ = 0;
    std::vector<char> bits_;
};

namespace detail {

/// Unrestricted Damerau-Levenshtein (Lowrance-Wagner) with pluggable costs.
/// Insertions and deletions cost 1, a mismatching substitution costs 1.
/// `match(i, j)` prices aligning a[i] with b[j] when the labels are equal;
/// `swap(k, i, l, j)` prices transposing a[k]..a[i] into b[l]..b[j]
/// (a[k] == b[j], a[i] == b[l]), excluding the deletions/insertions of the
/// symbols in between. Indices are 0-based. Returns the raw distance.
template <class Match, class Swap>
double lowrance_wagner(std::span<const int> a, std::span<const int> b, std::size_t alphabet_size,
                       Match&& match, Swap&& swap) {
    const std::size_t m = a.size(), n = b.size();
    if (m == 0 || n == 0) return static_cast<double>(std::max(m, n));
    const double inf = static_cast<double>(m + n);
    const std::size_t w = n + 2;
    std::vector<double> d((m + 2) * w, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * w + j]; };
    at(0, 0) = inf;
    for (std::size_t i = 0; i <= m; ++i) {
        at(i + 1, 0) = inf;
        at(i + 1, 1) = static_cast<double>(i);
    }
    for (std::size_t j = 0; j <= n; ++j) {
        at(0, j + 1) = inf;
        at(1, j + 1) = static_cast<double>(j);
    }
    std::vector<std::size_t> last_row(alphabet_size, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        std::size_t last_col = 0;
        const auto ai = static_cast<std::size_t>(a[i - 1]);
        for (std::size_t j = 1; j <= n; ++j) {
            const auto bj = static_cast<std::size_t>(b[j - 1]);
            const std::size_t k = last_row[bj];
            const std::size_t l = last_col;
            double sub;
            if (ai == bj) {
                sub = match(i - 1, j - 1);
                last_col = j;
            } else {
                sub = 1.0;
            }
            double best = std::min({at(i, j) + sub, at(i + 1, j) + 1.0, at(i, j + 1) + 1.0});
            if (k > 0 && l > 0) {
                const double t = at(k, l) + static_cast<double>(i - k - 1) + swap(k - 1, i - 1, l - 1, j - 1) +
                                 static_cast<double>(j - l - 1);
                best = std::min(best, t);
            }
            at(i + 1, j + 1) = best;
        }
        last_row[ai] = i;
    }
    return at(m + 1, n + 1);
}

}  // namespace detail

/// Raw concurrency-aware Damerau-Levenshtein distance: unit insert, delete and
/// substitute; an adjacent transposition costs 0 for concurrent labels and 1
/// otherwise.
double dl_distance(std::span<const int> a, std::span<const int> b, std::size_t alphabet_size,
                   const ConcurrencyMatrix& concurrent);

/// dl_distance divided by the length of the longer sequence; 0 when both are empty.
double cf_distance(std::span<const std::string> a, std::span<const std::string> b,
                   const ConcurrencyRelation& concurrent);

}  // namespace ddsim
