// Timing comparison of the serial reference elimination against the OpenMP
// round-based variant, on the matrices this engine actually produces: braiding
// kernels and graded-dimension spanning sets.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ybalg/envelope.hpp"

using namespace ybalg;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<RatVec> spanning_rows(const QuadPresentation& p, int m) {
    int64_t d = p.dim();
    auto ipow = [](int64_t b, int e) {
        int64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    std::vector<RatVec> rows;
    for (int i = 0; i + 2 <= m; ++i) {
        int64_t lw = ipow(d, i), rw = ipow(d, m - 2 - i);
        for (const auto& rv : p.relations.basis())
            for (int64_t w1 = 0; w1 < lw; ++w1)
                for (int64_t w2 = 0; w2 < rw; ++w2) {
                    RatVec row;
                    for (const auto& [pc, c] : rv.terms)
                        row.push((w1 * d * d + pc) * rw + w2, c);
                    rows.push_back(std::move(row));
                }
    }
    return rows;
}

void bench(const std::string& name, std::vector<RatVec> rows) {
    auto t0 = Clock::now();
    int64_t r_serial = rank_forward(RatOps{}, rows, /*parallel=*/false);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    int64_t r_par = rank_forward(RatOps{}, rows, /*parallel=*/true);
    double tp = seconds_since(t0);
    std::cout << name << ": rank " << r_serial << "  serial " << ts << "s  parallel " << tp << "s"
              << (r_serial == r_par ? "" : "  RANK DISAGREEMENT") << "\n";
}

void bench_rref(const std::string& name, std::vector<RatVec> rows, int64_t ambient) {
    auto t0 = Clock::now();
    auto e1 = rref_serial(RatOps{}, rows);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    auto e2 = rref_parallel(RatOps{}, rows);
    double tp = seconds_since(t0);
    bool same = e1.pivots == e2.pivots && e1.rows.size() == e2.rows.size();
    for (size_t i = 0; same && i < e1.rows.size(); ++i) {
        same = e1.rows[i].terms.size() == e2.rows[i].terms.size();
        for (size_t j = 0; same && j < e1.rows[i].terms.size(); ++j)
            same = e1.rows[i].terms[j].first == e2.rows[i].terms[j].first &&
                   e1.rows[i].terms[j].second == e2.rows[i].terms[j].second;
    }
    std::cout << name << " (ambient " << ambient << "): rank " << e1.rank() << "  serial " << ts
              << "s  parallel " << tp << "s  echelon " << (same ? "identical" : "DIFFERS") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP not available; parallel path runs serially\n";
#endif
    {
        YbAlgebra d4 = build_yb({Series::D, 4});
        bench_rref("kernel rows D:4", d4.quad_cover.relations.basis(), 144 * 144);
        bench("spanning D:4 envelope deg 3", spanning_rows(d4.envelope, 3));
        bench("spanning D:4 envelope deg 4", spanning_rows(d4.envelope, 4));
        bench("spanning D:4 dual deg 4", spanning_rows(d4.dual_straight, 4));
    }
    {
        YbAlgebra b3 = build_yb({Series::B, 3});
        bench("spanning B:3 envelope deg 4", spanning_rows(b3.envelope, 4));
        bench("spanning B:3 dual deg 4", spanning_rows(b3.dual_straight, 4));
    }
    return 0;
}
