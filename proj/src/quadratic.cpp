#include "ybalg/quadratic.hpp"

#include <algorithm>

namespace ybalg {

QuadPresentation quad_kernel_presentation(const BraidedSpace& y) {
    int64_t d = y.dim();
    SparseMatrix id_plus_psi = SparseMatrix::identity(d * d) + y.braiding_matrix();
    QuadPresentation p(y.basis(), kernel(id_plus_psi), "quad-kernel");
    return p;
}

QuadPresentation lambda_part(const QuadPresentation& p) {
    Subspace r = intersect(p.relations, wedge_square(p.dim()));
    QuadPresentation q(p.gens, std::move(r), "lambda-part");
    return q;
}

QuadPresentation quadratic_dual(const QuadPresentation& p, Pairing c) {
    Subspace r = annihilator(p.relations, c, p.dim());
    QuadPresentation q(p.gens, std::move(r),
                       "dual-of(" + p.provenance + (c == Pairing::Straight ? ",straight)" : ",reversed)"));
    q.dual_labels = !p.dual_labels;
    q.convention = c;
    return q;
}

RatVec relation_vector(const ExplicitRel& rel, int d) {
    std::vector<std::pair<int64_t, Rat>> terms;
    for (const auto& t : rel) {
        if (t.a < 0 || t.a >= d || t.b < 0 || t.b >= d)
            throw std::invalid_argument("relation_vector: generator index out of range");
        terms.emplace_back(static_cast<int64_t>(t.a) * d + t.b, t.coeff);
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    RatVec v;
    for (auto& [col, coeff] : terms) {
        if (!v.terms.empty() && v.terms.back().first == col) {
            v.terms.back().second += coeff;
            if (v.terms.back().second.is_zero()) v.terms.pop_back();
        } else if (!coeff.is_zero()) {
            v.push(col, coeff);
        }
    }
    return v;
}

namespace {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// rows spanning sum_i V^i (x) R (x) V^(m-2-i) inside Q^(D^m)
template <class Ops, class Conv>
int64_t spanning_rank(const Ops& ops, const QuadPresentation& p, int m, Conv conv) {
    int64_t d = p.dim();
    std::vector<SparseVec<typename Ops::Elem>> rows;
    int64_t relcount = p.relations.dim();
    rows.reserve(static_cast<size_t>((m - 1) * relcount * ipow(d, m - 2)));
    for (int i = 0; i + 2 <= m; ++i) {
        int64_t left_words = ipow(d, i);
        int64_t right_words = ipow(d, m - 2 - i);
        for (int64_t rel = 0; rel < relcount; ++rel) {
            const RatVec& rv = p.relations.basis()[rel];
            for (int64_t w1 = 0; w1 < left_words; ++w1) {
                int64_t base = w1 * d * d;
                for (int64_t w2 = 0; w2 < right_words; ++w2) {
                    SparseVec<typename Ops::Elem> row;
                    row.terms.reserve(rv.terms.size());
                    for (const auto& [pair_col, coeff] : rv.terms) {
                        int64_t col = (base + pair_col) * right_words + w2;
                        row.push(col, conv(coeff));
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rank_forward(ops, std::move(rows));
}

}  // namespace

GradedDim graded_dimension(const QuadPresentation& p, int m, FieldBackend backend, uint64_t prime) {
    if (m < 0) throw std::invalid_argument("graded_dimension: negative degree");
    int64_t d = p.dim();
    if (m == 0) return {1, FieldBackend::Rational};
    if (m == 1) return {d, FieldBackend::Rational};
    int64_t cols = ipow(d, m);
    constexpr int64_t kRationalColumnCap = 100000;
    constexpr int64_t kModularColumnCap = 2200000;
    if (backend == FieldBackend::Rational) {
        if (cols > kRationalColumnCap)
            throw BudgetExceeded("graded_dimension: " + std::to_string(cols) +
                                 " columns exceeds the rational budget; use the modular backend "
                                 "(degree >= 5) or a completed rewriting system count");
        int64_t r = spanning_rank(RatOps{}, p, m, [](const Rat& c) { return c; });
        return {cols - r, FieldBackend::Rational};
    }
    if (m <= 4)
        throw BudgetExceeded("graded_dimension: modular backend is reserved for degree >= 5");
    if (cols > kModularColumnCap)
        throw BudgetExceeded("graded_dimension: " + std::to_string(cols) +
                             " columns exceeds the modular budget");
    FpOps ops{PrimeField{prime}};
    int64_t r = spanning_rank(ops, p, m, [&](const Rat& c) {
        if (!c.is_small()) throw std::domain_error("graded_dimension: coefficient too large");
        uint64_t num = ops.f.from_i64(c.num_i64());
        uint64_t den = ops.f.from_i64(c.den_i64());
        return ops.mul(num, ops.inv(den));
    });
    return {cols - r, FieldBackend::Modular};
}

RelationCheck relation_list_check(const QuadPresentation& p, const std::vector<ExplicitRel>& rels) {
    RelationCheck out;
    out.all_contained = true;
    std::vector<RatVec> vecs;
    for (const auto& rel : rels) {
        RatVec v = relation_vector(rel, p.dim());
        bool c = p.relations.contains(v);
        out.contained.push_back(c);
        out.all_contained = out.all_contained && c;
        vecs.push_back(std::move(v));
    }
    Subspace span = Subspace::from_rows(p.relations.ambient(), std::move(vecs));
    out.independent = span.dim();
    out.span_equal = out.all_contained && span.dim() == p.relations.dim();
    return out;
}

}  // namespace ybalg
