// Carrier groups for the three classical series, realized as signed
// permutations: S_n (series A, all signs +1), D_n (even number of sign flips),
// B_n (all signed permutations).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ybalg {

enum class Series { A, B, D };

struct GroupSpec {
    Series series;
    int rank;  // n; series A means S_n acting on n letters

    bool reducible_warning() const { return series == Series::D && rank < 3; }
    std::string to_string() const;
    static GroupSpec parse(const std::string& s);  // "A:4", "B:3", "D:5"
};

// e_i |-> sgn[i] * e_{img[i]}  (0-based)
struct SignedPerm {
    std::vector<int> img;
    std::vector<int8_t> sgn;

    static SignedPerm identity(int n);
    int n() const { return static_cast<int>(img.size()); }
    bool is_identity() const;

    friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h);  // g∘h, h first
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img && sgn == o.sgn; }
    bool operator<(const SignedPerm& o) const {
        if (img != o.img) return img < o.img;
        return sgn < o.sgn;
    }

    int flips() const;  // number of -1 signs
    bool in_group(const GroupSpec& spec) const;
};

struct RootLabel {
    enum class Kind { Transposition, DoubleTransposition, ShortRoot };
    Kind kind;
    int i, j;  // 1-based; i<j for the two-index kinds, j unused for ShortRoot

    bool operator==(const RootLabel& o) const { return kind == o.kind && i == o.i && j == o.j; }
    bool operator<(const RootLabel& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
    std::string to_string() const;
};

struct Reflection {
    RootLabel label;
    SignedPerm elem;
    std::vector<int> alpha;     // root, integer coordinates
    std::vector<int> alpha_co;  // coroot scaled so <alpha_co, alpha> = 2
};

// Complete duplicate-free list in deterministic order: transpositions (lex),
// then double transpositions (lex), then short roots 1..n.
std::vector<Reflection> enumerate_reflections(const GroupSpec& spec);

int64_t reflection_count(const GroupSpec& spec);
int64_t group_order(const GroupSpec& spec);

SignedPerm reflection_element(const GroupSpec& spec, const RootLabel& label);

// g s g^{-1}, with its canonical label; throws if the result is not in the
// reflection table (cannot happen for group elements).
Reflection conjugate(const GroupSpec& spec, const SignedPerm& g, const Reflection& s);

// brute-force closure; intended for small ranks (tests, order checks)
std::vector<SignedPerm> enumerate_group(const GroupSpec& spec);

}  // namespace ybalg
