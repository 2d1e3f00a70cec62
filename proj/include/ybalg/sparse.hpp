// Sparse vectors over an abstract field and the coordinate-map matrix type.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ybalg/prime_field.hpp"
#include "ybalg/rational.hpp"

namespace ybalg {

// Field adaptors used by the templated elimination kernels.
struct RatOps {
    using Elem = Rat;
    static bool is_zero(const Elem& x) { return x.is_zero(); }
    static Elem zero() { return Rat(); }
    static Elem one() { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
};

struct FpOps {
    using Elem = uint64_t;
    PrimeField f;
    static bool is_zero(Elem x) { return x == 0; }
    static Elem zero() { return 0; }
    Elem one() const { return 1 % f.p; }
    Elem add(Elem a, Elem b) const { return f.add(a, b); }
    Elem sub(Elem a, Elem b) const { return f.sub(a, b); }
    Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
    Elem neg(Elem a) const { return f.neg(a); }
    Elem inv(Elem a) const { return f.inv(a); }
};

// Terms sorted by strictly increasing column index, no explicit zeros.
template <class T>
struct SparseVec {
    std::vector<std::pair<int64_t, T>> terms;

    bool empty() const { return terms.empty(); }
    int64_t lead() const { return terms.front().first; }
    const T& lead_coeff() const { return terms.front().second; }
    size_t nnz() const { return terms.size(); }

    void push(int64_t col, T v) { terms.emplace_back(col, std::move(v)); }
};

// r += c * s, merging sorted term lists
template <class Ops>
void axpy(const Ops& ops, SparseVec<typename Ops::Elem>& r, const typename Ops::Elem& c,
          const SparseVec<typename Ops::Elem>& s) {
    SparseVec<typename Ops::Elem> out;
    out.terms.reserve(r.terms.size() + s.terms.size());
    size_t i = 0, j = 0;
    while (i < r.terms.size() || j < s.terms.size()) {
        if (j == s.terms.size() || (i < r.terms.size() && r.terms[i].first < s.terms[j].first)) {
            out.terms.push_back(std::move(r.terms[i++]));
        } else if (i == r.terms.size() || s.terms[j].first < r.terms[i].first) {
            out.push(s.terms[j].first, ops.mul(c, s.terms[j].second));
            ++j;
        } else {
            auto v = ops.add(r.terms[i].second, ops.mul(c, s.terms[j].second));
            if (!Ops::is_zero(v)) out.push(r.terms[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

template <class Ops>
void scale(const Ops& ops, SparseVec<typename Ops::Elem>& r, const typename Ops::Elem& c) {
    for (auto& [col, v] : r.terms) v = ops.mul(v, c);
}

using RatVec = SparseVec<Rat>;

// Coordinate map with row-major iteration order; no stored zeros.
class SparseMatrix {
public:
    SparseMatrix(int64_t rows, int64_t cols) : rows_(rows), cols_(cols) {}

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    size_t nnz() const { return data_.size(); }

    void set(int64_t r, int64_t c, Rat v);
    void add(int64_t r, int64_t c, const Rat& v);
    Rat get(int64_t r, int64_t c) const;

    const std::map<std::pair<int64_t, int64_t>, Rat>& entries() const { return data_; }

    std::vector<RatVec> to_rows() const;

    static SparseMatrix identity(int64_t n);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);

private:
    int64_t rows_, cols_;
    std::map<std::pair<int64_t, int64_t>, Rat> data_;
};

}  // namespace ybalg
