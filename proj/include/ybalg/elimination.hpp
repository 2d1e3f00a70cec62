// Row elimination kernels. Two implementations of the same reduction: a serial
// reference and an OpenMP round-based variant. The reduced row echelon form of
// a row space is unique for a fixed column order, so both must produce
// identical output; the unit tests assert this.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ybalg/sparse.hpp"

namespace ybalg {

template <class Ops>
struct Echelon {
    // rows sorted by pivot column, pivots normalized to 1, fully reduced
    std::vector<SparseVec<typename Ops::Elem>> rows;
    std::vector<int64_t> pivots;
    int64_t rank() const { return static_cast<int64_t>(rows.size()); }
};

// Reduce v against a pivot map (pivot column -> normalized row).
template <class Ops>
void reduce_against(const Ops& ops, SparseVec<typename Ops::Elem>& v,
                    const std::map<int64_t, SparseVec<typename Ops::Elem>>& pivots) {
    size_t i = 0;
    while (i < v.terms.size()) {
        auto it = pivots.find(v.terms[i].first);
        if (it == pivots.end()) {
            ++i;
            continue;
        }
        auto c = ops.neg(v.terms[i].second);
        axpy(ops, v, c, it->second);
        // the eliminated column vanished; columns before it are untouched
    }
}

// Serial reference RREF: insert rows one at a time, keep the pivot set fully
// inter-reduced throughout.
template <class Ops>
Echelon<Ops> rref_serial(const Ops& ops, std::vector<SparseVec<typename Ops::Elem>> rows) {
    std::map<int64_t, SparseVec<typename Ops::Elem>> pivots;
    for (auto& r : rows) {
        reduce_against(ops, r, pivots);
        if (r.empty()) continue;
        auto lc = ops.inv(r.lead_coeff());
        scale(ops, r, lc);
        int64_t pc = r.lead();
        for (auto& [col, prow] : pivots) {
            (void)col;
            for (size_t i = 0; i < prow.terms.size(); ++i) {
                if (prow.terms[i].first == pc) {
                    auto c = ops.neg(prow.terms[i].second);
                    axpy(ops, prow, c, r);
                    break;
                }
                if (prow.terms[i].first > pc) break;
            }
        }
        pivots.emplace(pc, std::move(r));
    }
    Echelon<Ops> e;
    for (auto& [col, row] : pivots) {
        e.pivots.push_back(col);
        e.rows.push_back(std::move(row));
    }
    return e;
}

// Round-based elimination: every active row is reduced against the current
// pivot set (independently, hence in parallel), then new pivots are drafted
// serially. Back-substitution at the end yields the same canonical RREF.
template <class Ops>
Echelon<Ops> rref_parallel(const Ops& ops, std::vector<SparseVec<typename Ops::Elem>> rows) {
    using Vec = SparseVec<typename Ops::Elem>;
    std::map<int64_t, Vec> pivots;
    std::vector<Vec> active = std::move(rows);
    while (!active.empty()) {
        int64_t n = static_cast<int64_t>(active.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (int64_t i = 0; i < n; ++i) {
            reduce_against(ops, active[i], pivots);
        }
        std::vector<Vec> leftover;
        bool drafted = false;
        for (auto& r : active) {
            if (r.empty()) continue;
            auto it = pivots.find(r.lead());
            if (it == pivots.end()) {
                auto lc = ops.inv(r.lead_coeff());
                scale(ops, r, lc);
                pivots.emplace(r.lead(), std::move(r));
                drafted = true;
            } else {
                leftover.push_back(std::move(r));
            }
        }
        active = std::move(leftover);
        if (!drafted && !active.empty()) {
            // cannot happen: a nonzero reduced row always drafts or reduces further
            for (auto& r : active) reduce_against(ops, r, pivots);
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [](const Vec& v) { return v.empty(); }),
                         active.end());
        }
    }
    // back-substitute to full RREF
    std::vector<int64_t> cols;
    cols.reserve(pivots.size());
    for (auto& [c, row] : pivots) {
        (void)row;
        cols.push_back(c);
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto& row = it->second;
        size_t i = 1;
        while (i < row.terms.size()) {
            auto pit = pivots.find(row.terms[i].first);
            if (pit != pivots.end() && pit->first != it->first) {
                auto c = ops.neg(row.terms[i].second);
                axpy(ops, row, c, pit->second);
            } else {
                ++i;
            }
        }
    }
    Echelon<Ops> e;
    for (auto& [col, row] : pivots) {
        e.pivots.push_back(col);
        e.rows.push_back(std::move(row));
    }
    return e;
}

// Rank-only forward elimination; pivot rows are not normalized or
// back-substituted. Used for the big graded-dimension counts.
template <class Ops>
int64_t rank_forward(const Ops& ops, std::vector<SparseVec<typename Ops::Elem>> rows,
                     bool parallel = true) {
    using Vec = SparseVec<typename Ops::Elem>;
    std::map<int64_t, Vec> pivots;  // lead col -> row (lead coeff normalized to 1)
    std::vector<Vec> active = std::move(rows);
    auto reduce_lead = [&](Vec& v) {
        while (!v.empty()) {
            auto it = pivots.find(v.lead());
            if (it == pivots.end()) return;
            auto c = ops.neg(v.lead_coeff());
            axpy(ops, v, c, it->second);
        }
    };
    while (!active.empty()) {
        int64_t n = static_cast<int64_t>(active.size());
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
            for (int64_t i = 0; i < n; ++i) reduce_lead(active[i]);
        } else {
            for (int64_t i = 0; i < n; ++i) reduce_lead(active[i]);
        }
        std::vector<Vec> leftover;
        for (auto& r : active) {
            if (r.empty()) continue;
            auto it = pivots.find(r.lead());
            if (it == pivots.end()) {
                auto lc = ops.inv(r.lead_coeff());
                scale(ops, r, lc);
                pivots.emplace(r.lead(), std::move(r));
            } else {
                leftover.push_back(std::move(r));
            }
        }
        active = std::move(leftover);
    }
    return static_cast<int64_t>(pivots.size());
}

}  // namespace ybalg
