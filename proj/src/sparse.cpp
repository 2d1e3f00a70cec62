#include "ybalg/sparse.hpp"

#include <stdexcept>

namespace ybalg {

void SparseMatrix::set(int64_t r, int64_t c, Rat v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set: index out of bounds");
    if (v.is_zero()) {
        data_.erase({r, c});
    } else {
        data_[{r, c}] = std::move(v);
    }
}

void SparseMatrix::add(int64_t r, int64_t c, const Rat& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(r, c);
    auto it = data_.find(key);
    if (it == data_.end()) {
        set(r, c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) data_.erase(it);
    }
}

Rat SparseMatrix::get(int64_t r, int64_t c) const {
    auto it = data_.find({r, c});
    return it == data_.end() ? Rat() : it->second;
}

std::vector<RatVec> SparseMatrix::to_rows() const {
    std::vector<RatVec> rows(rows_);
    for (const auto& [rc, v] : data_) rows[rc.first].push(rc.second, v);
    return rows;
}

SparseMatrix SparseMatrix::identity(int64_t n) {
    SparseMatrix m(n, n);
    for (int64_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("SparseMatrix: shape mismatch");
    SparseMatrix r = a;
    for (const auto& [rc, v] : b.data_) r.add(rc.first, rc.second, v);
    return r;
}

}  // namespace ybalg
