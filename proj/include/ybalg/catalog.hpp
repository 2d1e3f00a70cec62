// The published presentations, bases, admissible-pair tables and Hilbert data
// for the A/B/D families, expanded schema-by-schema over index tuples. The
// verification engine checks these against values computed from first
// principles; entries here are recorded claims, not assumptions.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybalg/braided.hpp"
#include "ybalg/quadratic.hpp"

namespace ybalg {

enum class RelFamily {
    KernelD,      // generators of the quadratic kernel ideal, D case (u/uu sector)
    KernelDLoop,  // the two triple schemas rederived from the braiding cycles
    EnvelopeD,    // commutator generators of the enveloping ideal, D case
    KernelB,      // additional quadratic-kernel generators for B (r sector)
    EnvelopeB,    // additional enveloping-ideal generators for B (r sector)
    TrExplicit,   // classical Yang-Baxter presentation for the A series
    DualA,        // dual relations, A series (pairwise equalities)
    DualD,        // dual relations, D series
    DualB,        // additional dual relations, B series
    DualSquares   // x* y* with equal support vanish in the dual
};

struct CatalogRelation {
    std::string id;
    ExplicitRel rel;
};

// Expand a schema family over all admissible index tuples for the space's
// rank, in deterministic order. Throws if the family does not apply.
std::vector<CatalogRelation> catalog_relations(const BraidedSpace& y, RelFamily fam);

// Kernel-family list as published for the given spec (D families for series D,
// D+B families for series B), used by the containment suite.
std::vector<CatalogRelation> published_kernel_relations(const BraidedSpace& y);
std::vector<CatalogRelation> published_envelope_relations(const BraidedSpace& y);

struct ReducedMonomial {
    std::vector<GenLabel> letters;
    std::string to_string() const;
};

// The published normal-form pattern: products of blocks with pairwise disjoint
// supports ordered by smallest element. Series A uses the plain star blocks
// only; D adds the two starred variants; B adds the r-terminated block.
std::vector<ReducedMonomial> reduced_monomials(const GroupSpec& spec, int m);

// Published admissible-pair table for the D and B orders.
std::vector<std::pair<GenLabel, GenLabel>> published_t_set(const GroupSpec& spec);

struct PublishedSeries {
    std::vector<long long> dual_poly;      // printed dual Hilbert polynomial
    std::vector<long long> primal_series;  // printed Hilbert series prefix
    std::optional<long long> dual_total;   // printed total dual dimension, when stated
};
std::optional<PublishedSeries> published_series(const GroupSpec& spec);

}  // namespace ybalg
