#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ybalg/json_io.hpp"
#include "ybalg/report.hpp"

using namespace ybalg;

namespace {

GenLabel U(int i, int j) { return {GenLabel::Kind::U, i, j}; }
GenLabel UU(int i, int j) { return {GenLabel::Kind::UU, i, j}; }

int count_family(const BraidedSpace& y, RelFamily f, const std::string& prefix) {
    int c = 0;
    for (const auto& r : catalog_relations(y, f))
        if (r.id.rfind(prefix, 0) == 0) ++c;
    return c;
}

}  // namespace

TEST_CASE("catalog relation instance counts degenerate correctly with the rank") {
    BraidedSpace d3({Series::D, 3});
    CHECK(catalog_relations(d3, RelFamily::EnvelopeD).size() == 4);  // one triple, no splittings
    BraidedSpace d4({Series::D, 4});
    CHECK(catalog_relations(d4, RelFamily::EnvelopeD).size() == 28);  // 12 + 16
    CHECK(count_family(d4, RelFamily::EnvelopeD, "antiduo") == 12);
    CHECK(count_family(d4, RelFamily::EnvelopeD, "antitri") == 16);
    BraidedSpace b2({Series::B, 2});
    auto k2 = catalog_relations(b2, RelFamily::KernelB);
    CHECK(k2.size() == 3);  // b3, b4 and one r-commutator; no third index exists
    CHECK(count_family(b2, RelFamily::KernelB, "b1") == 0);
    CHECK(count_family(b2, RelFamily::KernelB, "rr") == 1);
    CHECK(catalog_relations(b2, RelFamily::EnvelopeB).size() == 1);  // the mixed commutator only
}

TEST_CASE("published pattern: the four degree-3 words for rank 4") {
    auto monos = reduced_monomials({Series::D, 4}, 3);
    std::set<std::string> got;
    for (const auto& m : monos) got.insert(m.to_string());
    std::set<std::string> expect{
        "u(1,2) u(1,3) u(1,4)",
        "u(1,2) u(1,4) uu(1,3)",
        "u(1,2) u(1,3) uu(1,4)",
        "u(2,3) u(2,4) uu(1,2)",
    };
    CHECK(got == expect);
}

TEST_CASE("published pattern counts at low degree") {
    CHECK(reduced_monomials({Series::B, 1}, 1).size() == 1);  // the bare r block
    CHECK(reduced_monomials({Series::B, 1}, 2).empty());
    CHECK(reduced_monomials({Series::D, 4}, 1).size() == 12);
    CHECK(reduced_monomials({Series::D, 4}, 2).size() == 24);  // printed example says 21
    CHECK(reduced_monomials({Series::A, 4}, 2).size() == 7);
    CHECK(reduced_monomials({Series::B, 4}, 1).size() == 16);
}

TEST_CASE("pattern blocks order by smallest support element with disjoint supports") {
    for (const auto& m : reduced_monomials({Series::D, 4}, 2)) {
        REQUIRE(m.letters.size() == 2);
        std::set<int> support;
        for (const auto& l : m.letters) {
            support.insert(l.i);
            if (l.kind != GenLabel::Kind::R) support.insert(l.j);
        }
        CHECK(support.size() >= 3);  // either a triple block or two disjoint pairs
    }
}

TEST_CASE("structural reduction: vanishing products and a nontrivial rewrite") {
    YbAlgebra alg = build_yb({Series::D, 4});
    DualReducer red(alg.envelope, Pairing::Straight, MonomialOrder::natural(12));
    int u12 = alg.space.index_of(U(1, 2));
    int v12 = alg.space.index_of(UU(1, 2));
    int u23 = alg.space.index_of(U(2, 3));
    int u13 = alg.space.index_of(U(1, 3));
    CHECK(red.reduce({u12, v12}).coeff.is_zero());
    CHECK(red.reduce({u12, u12}).coeff.is_zero());
    auto r = red.reduce({u12, u23});
    CHECK(r.coeff == Rat(1));
    CHECK(r.word == std::vector<int>{u12, u13});
}

TEST_CASE("structural reduction agrees with completed normal forms in degree 3") {
    for (GroupSpec spec : {GroupSpec{Series::D, 4}, GroupSpec{Series::B, 3}}) {
        YbAlgebra alg = build_yb(spec);
        int d = alg.space.dim();
        MonomialOrder order = MonomialOrder::natural(d);
        DualReducer red(alg.envelope, Pairing::Straight, order);
        RewriteSystem quad = build_rewriting_system(alg.dual_straight, order);
        RewriteSystem sys = truncated_completion(quad, 5);
        int disagreements = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    auto r = red.reduce({a, b, c});
                    Poly nf = sys.normal_form(sys.to_ranks({a, b, c}));
                    bool ok;
                    if (r.coeff.is_zero()) {
                        ok = nf.empty();
                    } else {
                        ok = nf.size() == 1 && nf.begin()->second == r.coeff &&
                             sys.to_gens(nf.begin()->first) == r.word;
                    }
                    disagreements += !ok;
                }
        CHECK(disagreements == 0);
    }
}

TEST_CASE("structural reduction agrees on random degree-4 words") {
    YbAlgebra alg = build_yb({Series::D, 4});
    MonomialOrder order = MonomialOrder::natural(12);
    DualReducer red(alg.envelope, Pairing::Straight, order);
    RewriteSystem sys =
        truncated_completion(build_rewriting_system(alg.dual_straight, order), 6);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> letter(0, 11);
    for (int t = 0; t < 1000; ++t) {
        std::vector<int> w{letter(rng), letter(rng), letter(rng), letter(rng)};
        auto r = red.reduce(w);
        Poly nf = sys.normal_form(sys.to_ranks(w));
        if (r.coeff.is_zero()) {
            CHECK(nf.empty());
        } else {
            REQUIRE(nf.size() == 1);
            CHECK(nf.begin()->second == r.coeff);
            CHECK(sys.to_gens(nf.begin()->first) == r.word);
        }
    }
}

TEST_CASE("published admissible-pair table differs from the computed one as recorded") {
    YbAlgebra alg = build_yb({Series::D, 4});
    MonomialOrder order = MonomialOrder::natural(12);
    RewriteSystem rs = build_rewriting_system(alg.dual_straight, order);
    std::set<std::pair<int, int>> computed;
    for (auto [a, b] : rs.t_set()) computed.emplace(order.gen_of[a], order.gen_of[b]);
    std::set<std::pair<int, int>> published;
    for (const auto& [x, y] : published_t_set({Series::D, 4}))
        published.emplace(alg.space.index_of(x), alg.space.index_of(y));
    // the published table misses exactly one pair per triple: u(kl) uu(kj)
    std::set<std::pair<int, int>> missing;
    for (const auto& p : computed)
        if (!published.count(p)) missing.insert(p);
    std::set<std::pair<int, int>> expect;
    for (int k = 1; k <= 4; ++k)
        for (int j = k + 1; j <= 4; ++j)
            for (int l = j + 1; l <= 4; ++l)
                expect.emplace(alg.space.index_of(U(k, l)), alg.space.index_of(UU(k, j)));
    CHECK(missing == expect);
    for (const auto& p : published) CHECK(computed.count(p));
    CHECK(computed.size() == static_cast<size_t>(alg.envelope.relations.dim()));
}

TEST_CASE("dual equality chains: adjudicated verdicts are stable") {
    // the first equality of each shared-index chain holds under both pairing
    // conventions; the remaining two, as published, fail under both — the
    // verdicts below are the computed adjudication, frozen
    YbAlgebra alg = build_yb({Series::A, 3});
    auto rels = catalog_relations(alg.space, RelFamily::DualA);
    REQUIRE(rels.size() == 3);
    for (Pairing c : {Pairing::Straight, Pairing::Reversed}) {
        QuadPresentation dual = quadratic_dual(alg.envelope, c);
        std::vector<bool> holds;
        for (const auto& r : rels)
            holds.push_back(dual.relations.contains(relation_vector(r.rel, alg.space.dim())));
        CHECK(holds == std::vector<bool>{true, false, false});
    }
    // D chains: the second and third families hold fully, the first loses one leg
    YbAlgebra d3 = build_yb({Series::D, 3});
    auto drels = catalog_relations(d3.space, RelFamily::DualD);
    int held = 0;
    for (const auto& r : drels)
        held += d3.dual_straight.relations.contains(relation_vector(r.rel, d3.space.dim()));
    CHECK(held == static_cast<int>(drels.size()) - 1);  // dual3.eq2 is the one misprint
    // the B chain holds in full under the straight pairing
    YbAlgebra b2 = build_yb({Series::B, 2});
    for (const auto& r : catalog_relations(b2.space, RelFamily::DualB))
        CHECK(b2.dual_straight.relations.contains(relation_vector(r.rel, b2.space.dim())));
}

TEST_CASE("pattern count equals the admissible-word count when the dual is confluent") {
    // A:3 is the one catalog dual that is confluent under its order
    YbAlgebra alg = build_yb({Series::A, 3});
    MonomialOrder order = MonomialOrder::natural(alg.space.dim());
    RewriteSystem rs = build_rewriting_system(alg.dual_straight, order);
    REQUIRE(rs.pbw_confluent());
    for (int m = 1; m <= 4; ++m)
        CHECK(static_cast<int64_t>(reduced_monomials({Series::A, 3}, m).size()) ==
              rs.count_normal_words(m));
}

TEST_CASE("verification report for the one-generator group is all clean") {
    VerificationReport rep = verification_report({Series::B, 1});
    CHECK(rep.mismatches() == 0);
    bool saw_dual_dim1 = false;
    for (const auto& c : rep.checks) {
        if (c.id == "dual_dim[1]") {
            saw_dual_dim1 = true;
            CHECK(c.computed == "1");
        }
    }
    CHECK(saw_dual_dim1);
}

TEST_CASE("the A-series pattern really is a basis: counts match exact dimensions") {
    // unlike the D/B patterns, the classical star-monomial pattern agrees
    // with the linear-algebra dimensions in every checked degree
    for (int n : {3, 4}) {
        YbAlgebra alg = build_yb({Series::A, n});
        for (int m = 2; m <= 4; ++m)
            CHECK(static_cast<int64_t>(reduced_monomials({Series::A, n}, m).size()) ==
                  graded_dimension(alg.dual_straight, m).dim);
    }
}

TEST_CASE("presentation JSON carries the declared schema") {
    YbAlgebra alg = build_yb({Series::D, 2});
    Json j = presentation_json(alg.quad_cover);
    REQUIRE(j.contains("generators"));
    REQUIRE(j.contains("relations"));
    REQUIRE(j.contains("provenance"));
    REQUIRE(j.contains("convention"));
    CHECK(j["generators"].size() == 2);
    CHECK(j["provenance"] == "quad-kernel");
    // every relation is a list of [coefficient, [label, label]] terms
    for (const auto& rel : j["relations"]) {
        for (const auto& term : rel) {
            REQUIRE(term.size() == 2);
            CHECK(term[0].is_string());
            REQUIRE(term[1].size() == 2);
        }
    }
    // u(1,2) (x) u(1,2) is the first canonical kernel row for the 2-generator group
    CHECK(j["relations"][0][0][0] == "1");
    CHECK(j["relations"][0][0][1][0] == "u(1,2)");
}

TEST_CASE("verification reports are byte-identical across runs") {
    VerificationReport a = verification_report({Series::D, 3});
    VerificationReport b = verification_report({Series::D, 3});
    CHECK(report_json(a).dump() == report_json(b).dump());
}

TEST_CASE("the trivial group builds with empty algebras rather than erroring") {
    YbAlgebra alg = build_yb({Series::A, 1});
    CHECK(alg.space.dim() == 0);
    CHECK(alg.envelope.relations.dim() == 0);
    CHECK(graded_dimension(alg.envelope, 0).dim == 1);
    CHECK(graded_dimension(alg.envelope, 1).dim == 0);
    CHECK(graded_dimension(alg.envelope, 2).dim == 0);
    CHECK(reduced_monomials({Series::A, 1}, 1).empty());
}

TEST_CASE("rank-2 D builds with a warning and splits into two free generators") {
    VerificationReport rep = verification_report({Series::D, 2});
    bool warned = false;
    for (const auto& c : rep.checks) warned = warned || c.id == "spec.reducible_warning";
    CHECK(warned);
    YbAlgebra alg = build_yb({Series::D, 2});
    CHECK(alg.envelope.relations.dim() == 0);
    CHECK(alg.quad_cover.relations.dim() == 3);
    // the braiding preserves the span of each pair block
    auto [s1, p1] = alg.space.braid_pair(0, 1);
    CHECK(std::set<int>{p1.first, p1.second} == std::set<int>{0, 1});
}
