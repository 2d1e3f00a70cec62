#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support/dense_oracle.hpp"
#include "ybalg/group.hpp"

using namespace ybalg;

namespace {

// matrix of 1 - g on the standard basis
std::vector<std::vector<int>> one_minus(const SignedPerm& g) {
    int n = g.n();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] += 1;
        m[g.img[i]][i] -= g.sgn[i];
    }
    return m;
}

}  // namespace

TEST_CASE("spec parsing and warnings") {
    GroupSpec s = GroupSpec::parse("D:5");
    CHECK(s.series == Series::D);
    CHECK(s.rank == 5);
    CHECK(!s.reducible_warning());
    CHECK(GroupSpec::parse("D:2").reducible_warning());
    CHECK_THROWS_AS(GroupSpec::parse("E:8"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("A:0"), std::invalid_argument);
    CHECK(GroupSpec::parse("B:3").to_string() == "B:3");
}

TEST_CASE("reflection counts for the three series") {
    CHECK(enumerate_reflections({Series::A, 3}).size() == 3);
    CHECK(enumerate_reflections({Series::A, 4}).size() == 6);
    CHECK(enumerate_reflections({Series::D, 4}).size() == 12);
    CHECK(enumerate_reflections({Series::B, 4}).size() == 16);
    CHECK(enumerate_reflections({Series::A, 1}).empty());  // trivial group
}

TEST_CASE("B:4 reflections by brute force over all signed permutations") {
    // enumerate all 2^4 * 4! signed permutations, count codimension-1 fixed spaces
    GroupSpec spec{Series::B, 4};
    std::vector<SignedPerm> all = enumerate_group(spec);
    CHECK(all.size() == 384);
    int count = 0;
    for (const auto& g : all)
        if (testing::dense_int_rank(one_minus(g)) == 1) ++count;
    CHECK(count == 16);
    CHECK(count == static_cast<int>(enumerate_reflections(spec).size()));
}

TEST_CASE("group orders by closure enumeration") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(static_cast<int64_t>(enumerate_group({Series::A, n}).size()) ==
              group_order({Series::A, n}));
        CHECK(static_cast<int64_t>(enumerate_group({Series::B, n}).size()) ==
              group_order({Series::B, n}));
        if (n >= 2)
            CHECK(static_cast<int64_t>(enumerate_group({Series::D, n}).size()) ==
                  group_order({Series::D, n}));
    }
}

TEST_CASE("every reflection is an involution with a codimension-1 moved space") {
    for (GroupSpec spec : {GroupSpec{Series::A, 4}, GroupSpec{Series::D, 4}, GroupSpec{Series::B, 3}}) {
        for (const auto& r : enumerate_reflections(spec)) {
            CHECK((r.elem * r.elem).is_identity());
            CHECK(testing::dense_int_rank(one_minus(r.elem)) == 1);
            // the defining formula s(v) = v - <alpha*, v> alpha on basis vectors
            int n = spec.rank;
            for (int i = 0; i < n; ++i) {
                std::vector<int> expected(n, 0);
                expected[i] = 1;
                for (int k = 0; k < n; ++k) expected[k] -= r.alpha_co[i] * r.alpha[k];
                std::vector<int> actual(n, 0);
                actual[r.elem.img[i]] = r.elem.sgn[i];
                CHECK(expected == actual);
            }
        }
    }
}

TEST_CASE("composition and inverses") {
    GroupSpec spec{Series::A, 3};
    SignedPerm t12 = reflection_element(spec, {RootLabel::Kind::Transposition, 1, 2});
    SignedPerm t23 = reflection_element(spec, {RootLabel::Kind::Transposition, 2, 3});
    SignedPerm c = t12 * t23;  // 1 -> 2 -> 3 -> 1
    CHECK(c.img[0] == 1);
    CHECK(c.img[1] == 2);
    CHECK(c.img[2] == 0);
    CHECK((c * c.inverse()).is_identity());
    for (const auto& g : enumerate_group({Series::B, 2}))
        CHECK((g * g.inverse()).is_identity());
}

TEST_CASE("double transpositions square to the identity") {
    GroupSpec spec{Series::D, 3};
    SignedPerm s = reflection_element(spec, {RootLabel::Kind::DoubleTransposition, 1, 2});
    CHECK((s * s).is_identity());
    SignedPerm expected = SignedPerm::identity(3);
    expected.img = {1, 0, 2};
    expected.sgn = {-1, -1, 1};
    CHECK(s == expected);
}

TEST_CASE("conjugation relabels reflections") {
    GroupSpec spec{Series::D, 3};
    auto refls = enumerate_reflections(spec);
    SignedPerm t23 = reflection_element(spec, {RootLabel::Kind::Transposition, 2, 3});
    Reflection t12;
    for (const auto& r : refls)
        if (r.label == RootLabel{RootLabel::Kind::Transposition, 1, 2}) t12 = r;
    Reflection conj = conjugate(spec, t23, t12);
    CHECK(conj.label == RootLabel{RootLabel::Kind::Transposition, 1, 3});

    // identity fixes everything
    for (const auto& r : refls)
        CHECK(conjugate(spec, SignedPerm::identity(3), r).label == r.label);

    // conjugating a long-root reflection by a sign flip gives the short-root pattern
    GroupSpec bspec{Series::B, 2};
    SignedPerm s1 = reflection_element(bspec, {RootLabel::Kind::ShortRoot, 1, 0});
    Reflection dt;
    for (const auto& r : enumerate_reflections(bspec))
        if (r.label == RootLabel{RootLabel::Kind::DoubleTransposition, 1, 2}) dt = r;
    CHECK(conjugate(bspec, s1, dt).label == RootLabel{RootLabel::Kind::Transposition, 1, 2});
}

TEST_CASE("conjugation permutes the reflection set bijectively") {
    for (GroupSpec spec : {GroupSpec{Series::D, 3}, GroupSpec{Series::D, 4}, GroupSpec{Series::B, 3},
                           GroupSpec{Series::A, 4}}) {
        auto refls = enumerate_reflections(spec);
        for (const auto& g : enumerate_group(spec)) {
            std::set<RootLabel> images;
            for (const auto& r : refls) images.insert(conjugate(spec, g, r).label);
            CHECK(images.size() == refls.size());
        }
    }
}
