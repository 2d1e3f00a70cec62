#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybalg/morphisms.hpp"

using namespace ybalg;

TEST_CASE("map construction and label images") {
    GeneratorMap m = build_map("AtoD:3");
    CHECK(m.source.series == Series::A);
    CHECK(m.target.series == Series::D);
    CHECK(m.source_gens.size() == 3);
    for (size_t k = 0; k < m.source_gens.size(); ++k) CHECK(m.source_gens[k] == m.target_of[k]);

    GeneratorMap step = build_map("step:D:3");
    CHECK(step.source.rank == 3);
    CHECK(step.target.rank == 4);
    CHECK(step.source_gens.size() == 6);

    CHECK_THROWS_AS(build_map("DtoA:3"), std::invalid_argument);
}

TEST_CASE("group embedding is a homomorphism on the source") {
    GeneratorMap m = build_map("step:B:2");
    for (const auto& g : enumerate_group(m.source))
        for (const auto& h : enumerate_group(m.source))
            CHECK(m.embed_group(g * h) == m.embed_group(g) * m.embed_group(h));
}

TEST_CASE("the sign-forgetting projection splits the cross-series embedding") {
    GeneratorMap m = build_map("AtoB:3");
    CHECK(m.has_projection());
    for (const auto& g : enumerate_group(m.source))
        CHECK(m.project_group(m.embed_group(g)) == g);
    for (const auto& g : enumerate_group(m.target))
        for (const auto& h : enumerate_group(m.target))
            CHECK(m.project_group(g * h) == m.project_group(g) * m.project_group(h));
    CHECK(!build_map("step:D:2").has_projection());
}

TEST_CASE("cross-series maps preserve relations and are perfect in degree 2") {
    for (const char* kind : {"AtoD:3", "AtoD:4", "AtoB:3", "AtoB:4"}) {
        MorphismCheck chk = check_morphism(build_map(kind));
        CHECK(chk.coaction_compatible);
        CHECK(chk.relations_preserved);
        CHECK(chk.failing_relations.empty());
        CHECK(chk.perfect_subquotient_deg2);
    }
}

TEST_CASE("rank-step maps preserve relations and are perfect in degree 2") {
    for (const char* kind : {"step:A:2", "step:A:3", "step:D:2", "step:D:3", "step:B:2", "step:B:3"}) {
        MorphismCheck chk = check_morphism(build_map(kind));
        CHECK(chk.coaction_compatible);
        CHECK(chk.relations_preserved);
        CHECK(chk.perfect_subquotient_deg2);
    }
}

TEST_CASE("the identity map is trivially perfect") {
    GroupSpec spec{Series::D, 3};
    GeneratorMap m;
    m.kind = "identity:D:3";
    m.source = m.target = spec;
    for (const auto& r : enumerate_reflections(spec)) {
        m.source_gens.push_back(GenLabel::from_root(r.label));
        m.target_of.push_back(GenLabel::from_root(r.label));
    }
    YbAlgebra alg = build_yb(spec);
    MorphismCheck chk = check_morphism(m, alg, alg);
    CHECK(chk.coaction_compatible);
    CHECK(chk.relations_preserved);
    CHECK(chk.perfect_subquotient_deg2);
}
