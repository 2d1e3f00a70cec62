// Generator-level maps between the series algebras: A into D, A into B, and
// the rank-step inclusions, with relation preservation and the degree-2
// perfect-subquotient condition (the pullback of the larger relation space
// along the inclusion equals the smaller one).
#pragma once

#include <string>
#include <vector>

#include "ybalg/envelope.hpp"

namespace ybalg {

struct GeneratorMap {
    GroupSpec source, target;
    std::vector<GenLabel> source_gens;           // in source basis order
    std::vector<GenLabel> target_of;             // image labels, signs all +1
    std::string kind;                            // "AtoD:n", "AtoB:n", "step:S:n"

    SignedPerm embed_group(const SignedPerm& g) const;   // j: source group into target
    bool has_projection() const { return source.series == Series::A; }
    // p: forget signs (cross-series maps); left inverse of the embedding
    SignedPerm project_group(const SignedPerm& g) const;
};

// kind strings: "AtoD:4", "AtoB:3", "step:D:3" (rank n into n+1)
GeneratorMap build_map(const std::string& kind);

struct MorphismCheck {
    bool coaction_compatible;
    bool relations_preserved;
    std::vector<std::string> failing_relations;
    bool perfect_subquotient_deg2;
};

MorphismCheck check_morphism(const GeneratorMap& m, const YbAlgebra& src, const YbAlgebra& tgt);
MorphismCheck check_morphism(const GeneratorMap& m);

}  // namespace ybalg
