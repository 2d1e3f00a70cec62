// Test-only dense Gaussian elimination over the rationals, kept independent of
// the sparse kernels it cross-checks.
#pragma once

#include <vector>

#include "ybalg/sparse.hpp"

namespace ybalg::testing {

using DenseMatrix = std::vector<std::vector<Rat>>;

inline DenseMatrix densify(const SparseMatrix& m) {
    DenseMatrix d(m.rows(), std::vector<Rat>(m.cols()));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

inline int64_t dense_rank(DenseMatrix a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        Rat inv = a[rank][col].inv();
        for (size_t c = col; c < cols; ++c) a[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return static_cast<int64_t>(rank);
}

inline int64_t dense_kernel_dim(const SparseMatrix& m) { return m.cols() - dense_rank(densify(m)); }

// rank of a small integer matrix (for reflection fixed-space checks)
inline int64_t dense_int_rank(const std::vector<std::vector<int>>& m) {
    DenseMatrix d(m.size());
    for (size_t r = 0; r < m.size(); ++r)
        for (int v : m[r]) d[r].push_back(Rat(v));
    return dense_rank(std::move(d));
}

}  // namespace ybalg::testing
