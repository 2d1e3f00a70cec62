#include "ybalg/subspace.hpp"

#include <stdexcept>

namespace ybalg {

Subspace Subspace::from_rows(int64_t ambient, std::vector<RatVec> rows) {
    Subspace s(ambient);
    auto ech = rref_parallel(RatOps{}, std::move(rows));
    s.basis_ = std::move(ech.rows);
    s.pivots_ = std::move(ech.pivots);
    return s;
}

Subspace Subspace::full(int64_t ambient) {
    Subspace s(ambient);
    for (int64_t i = 0; i < ambient; ++i) {
        RatVec v;
        v.push(i, Rat(1));
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    if (!v.terms.empty() && (v.terms.front().first < 0 || v.terms.back().first >= ambient_))
        throw std::invalid_argument("Subspace::contains: vector dimension mismatch");
    RatVec w = v;
    RatOps ops;
    size_t bi = 0;
    size_t i = 0;
    while (i < w.terms.size()) {
        // pivots_ sorted: advance bi to pivot == current column if any
        while (bi < pivots_.size() && pivots_[bi] < w.terms[i].first) ++bi;
        if (bi < pivots_.size() && pivots_[bi] == w.terms[i].first) {
            Rat c = -w.terms[i].second;
            axpy(ops, w, c, basis_[bi]);
        } else {
            return false;  // nonzero coordinate at a non-pivot column
        }
    }
    return w.empty();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    if (a.basis_.size() != b.basis_.size()) return false;
    for (size_t i = 0; i < a.basis_.size(); ++i) {
        if (a.basis_[i].terms.size() != b.basis_[i].terms.size()) return false;
        for (size_t j = 0; j < a.basis_[i].terms.size(); ++j) {
            if (a.basis_[i].terms[j].first != b.basis_[i].terms[j].first ||
                a.basis_[i].terms[j].second != b.basis_[i].terms[j].second)
                return false;
        }
    }
    return true;
}

int64_t rank(const SparseMatrix& m) { return rank_forward(RatOps{}, m.to_rows()); }

int64_t rank_mod(const SparseMatrix& m, uint64_t prime) {
    FpOps ops{PrimeField{prime}};
    std::vector<SparseVec<uint64_t>> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) {
        // rational entry maps to num * den^{-1} mod p; fails only if p divides a denominator
        uint64_t num, den;
        if (v.is_small()) {
            num = ops.f.from_i64(v.num_i64());
            den = ops.f.from_i64(v.den_i64());
        } else {
            // fold limbs; entries in practice are small integers
            long long n = v.num_big().fits_i64() ? v.num_big().to_i64() : 0;
            long long d = v.den_big().fits_i64() ? v.den_big().to_i64() : 0;
            if ((n == 0 && !v.num_big().is_zero()) || d == 0)
                throw std::domain_error("rank_mod: entry too large for modular backend");
            num = ops.f.from_i64(n);
            den = ops.f.from_i64(d);
        }
        if (den == 0) throw std::domain_error("rank_mod: denominator divisible by prime");
        rows[rc.first].push(rc.second, ops.mul(num, ops.inv(den)));
    }
    return rank_forward(ops, std::move(rows));
}

Subspace kernel(const SparseMatrix& m) {
    auto ech = rref_parallel(RatOps{}, m.to_rows());
    // free columns -> kernel vectors; then canonicalize the kernel basis
    std::vector<bool> is_pivot(m.cols(), false);
    for (int64_t p : ech.pivots) is_pivot[p] = true;
    std::vector<RatVec> kerrows;
    for (int64_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v;
        // x_f = 1; x_{pivot_i} = -row_i[f]
        std::vector<std::pair<int64_t, Rat>> terms;
        terms.emplace_back(f, Rat(1));
        for (size_t i = 0; i < ech.rows.size(); ++i) {
            for (const auto& [col, c] : ech.rows[i].terms) {
                if (col == f) {
                    terms.emplace_back(ech.pivots[i], -c);
                    break;
                }
                if (col > f) break;
            }
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        v.terms = std::move(terms);
        kerrows.push_back(std::move(v));
    }
    return Subspace::from_rows(m.cols(), std::move(kerrows));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    // solve sum a_i u_i - sum b_j w_j = 0 over the stacked coefficient space
    int64_t ka = a.dim(), kb = b.dim();
    SparseMatrix m(a.ambient(), ka + kb);
    for (int64_t i = 0; i < ka; ++i)
        for (const auto& [col, v] : a.basis()[i].terms) m.add(col, i, v);
    for (int64_t j = 0; j < kb; ++j)
        for (const auto& [col, v] : b.basis()[j].terms) m.add(col, ka + j, -v);
    Subspace coeff = kernel(m);
    RatOps ops;
    std::vector<RatVec> rows;
    for (const auto& cv : coeff.basis()) {
        RatVec x;
        for (const auto& [idx, c] : cv.terms) {
            if (idx >= ka) break;
            axpy(ops, x, c, a.basis()[idx]);
        }
        if (!x.empty()) rows.push_back(std::move(x));
    }
    return Subspace::from_rows(a.ambient(), std::move(rows));
}

Subspace annihilator(const Subspace& a, Pairing pairing, int64_t tensor_dim) {
    // rows of `a` as a matrix over dual coordinates; annihilator = its kernel
    if (pairing == Pairing::Reversed) {
        if (tensor_dim * tensor_dim != a.ambient())
            throw std::invalid_argument("annihilator: reversed pairing needs a tensor square");
    }
    auto dual_col = [&](int64_t c) {
        if (pairing == Pairing::Straight) return c;
        int64_t i = c / tensor_dim, j = c % tensor_dim;
        return j * tensor_dim + i;
    };
    SparseMatrix m(a.dim(), a.ambient());
    for (int64_t i = 0; i < a.dim(); ++i)
        for (const auto& [col, v] : a.basis()[i].terms) m.add(i, dual_col(col), v);
    return kernel(m);
}

Subspace wedge_square(int64_t d) {
    std::vector<RatVec> rows;
    for (int64_t a = 0; a < d; ++a) {
        for (int64_t b = a + 1; b < d; ++b) {
            RatVec v;
            v.push(a * d + b, Rat(1));
            v.push(b * d + a, Rat(-1));
            rows.push_back(std::move(v));
        }
    }
    return Subspace::from_rows(d * d, std::move(rows));
}

}  // namespace ybalg
