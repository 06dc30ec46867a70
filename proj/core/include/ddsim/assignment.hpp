#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ddsim {

/// Dense row-major cost matrix.
class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct Assignment {
    /// (row, col) pairs sorted by row; min(rows, cols) entries.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// Sum of the selected cells, accumulated in row order.
    double total_cost = 0.0;
};

/// Minimum-cost rectangular assignment (Kuhn-Munkres with potentials,
/// O(n^2 m) for n = min(rows, cols)). Every row is matched when rows <= cols,
/// every column otherwise.
Assignment solve_assignment(const CostMatrix& cost);

}  // namespace ddsim
