// Quadratic presentations T(V)/<R> with R inside V(x)V, their antisymmetric
// parts, quadratic duals under either pairing convention, and exact graded
// dimensions dim A_m = D^m - dim(sum_i V^i (x) R (x) V^(m-2-i)).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ybalg/braided.hpp"
#include "ybalg/labels.hpp"
#include "ybalg/subspace.hpp"

namespace ybalg {

struct RelTerm {
    Rat coeff;
    int a, b;  // generator indices, tensor e_a (x) e_b
};
using ExplicitRel = std::vector<RelTerm>;

struct QuadPresentation {
    std::vector<GenLabel> gens;
    bool dual_labels = false;  // generators are the dual basis of `gens`
    Subspace relations;        // canonical subspace of Q^(D*D)
    std::string provenance;
    Pairing convention = Pairing::Straight;

    int dim() const { return static_cast<int>(gens.size()); }
    QuadPresentation(std::vector<GenLabel> g, Subspace r, std::string prov)
        : gens(std::move(g)), relations(std::move(r)), provenance(std::move(prov)) {}
};

QuadPresentation quad_kernel_presentation(const BraidedSpace& y);
QuadPresentation lambda_part(const QuadPresentation& p);
QuadPresentation quadratic_dual(const QuadPresentation& p, Pairing c);

RatVec relation_vector(const ExplicitRel& rel, int d);

enum class FieldBackend { Rational, Modular };

struct GradedDim {
    int64_t dim;
    FieldBackend backend;  // Modular results are upper bounds on the dimension
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Exact when backend == Rational. Refuses combinations outside the resource
// budget instead of approximating: the rational backend is for m <= 4 (and
// small alphabets beyond that), the modular backend only for m >= 5.
GradedDim graded_dimension(const QuadPresentation& p, int m,
                           FieldBackend backend = FieldBackend::Rational,
                           uint64_t prime = kDefaultPrime);

struct RelationCheck {
    std::vector<bool> contained;
    bool all_contained;
    bool span_equal;
    int64_t independent;  // rank of the checked list
};

RelationCheck relation_list_check(const QuadPresentation& p, const std::vector<ExplicitRel>& rels);

struct HilbertEntry {
    int64_t dim;
    std::string tag;  // "rational", "modular(p)", "count"
};
using HilbertData = std::vector<HilbertEntry>;

}  // namespace ybalg
