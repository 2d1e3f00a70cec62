// Noncommutative rewriting over the free algebra: deglex-ordered rules with
// 2-letter leading words extracted from a quadratic relation space, overlap
// (diamond) checking, normal forms, admissible-word counting, and truncated
// Knuth-Bendix completion for exact counts past non-confluent degrees.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybalg/quadratic.hpp"

namespace ybalg {

using Word = std::vector<int>;  // letters are order ranks: 0 is the smallest generator

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using Poly = std::map<Word, Rat, DeglexLess>;

Poly poly_scale(Poly p, const Rat& c);
void poly_add(Poly& p, const Poly& q, const Rat& c = Rat(1));

// Total order on the generators: rank 0 is the smallest. The named orders put
// u-labels first (lexicographic), then uu-labels, then r-labels, matching the
// catalog orders for the D and B families; words compare by degree first.
struct MonomialOrder {
    std::vector<int> rank_of;   // generator index -> rank
    std::vector<int> gen_of;    // rank -> generator index

    static MonomialOrder natural(int d);
    static MonomialOrder custom(const std::vector<GenLabel>& gens,
                                const std::vector<std::string>& order);
    // "paperD" | "paperB" | "lex" | "custom:l1,l2,..."
    static MonomialOrder from_spec(const std::vector<GenLabel>& gens, const std::string& spec);
};

struct Overlap {
    Word word;       // the ambiguous word
    Poly left_nf;    // normal form reducing the left occurrence first
    Poly right_nf;   // reducing the right occurrence first
};

class RewriteSystem {
public:
    RewriteSystem(int d, std::vector<std::string> names, MonomialOrder order)
        : d_(d), names_(std::move(names)), order_(std::move(order)) {}

    int alphabet_size() const { return d_; }
    const std::vector<std::string>& names() const { return names_; }
    const MonomialOrder& order() const { return order_; }
    const std::map<Word, Poly, DeglexLess>& rules() const { return rules_; }
    size_t rule_count() const { return rules_.size(); }
    int max_rule_degree() const { return max_lhs_len_; }

    void add_rule(Word lhs, Poly rhs);

    // 2-letter words that are no rule's leading word
    std::vector<std::pair<int, int>> t_set() const;

    Poly normal_form(const Poly& p) const;
    Poly normal_form(const Word& w) const;

    // degree-3 overlap check for the quadratic part; true iff every overlap resolves
    bool pbw_confluent(std::vector<Overlap>* failures = nullptr, bool parallel = true) const;

    // words of length m avoiding every leading word as a factor; exact graded
    // dimension when the system is confluent through degree m
    int64_t count_normal_words(int m) const;

    // words/labels in generator-index space to rank space and back
    Word to_ranks(const std::vector<int>& gen_indices) const;
    std::vector<int> to_gens(const Word& w) const;
    std::string word_string(const Word& w) const;

private:
    int d_;
    std::vector<std::string> names_;  // indexed by rank
    MonomialOrder order_;
    std::map<Word, Poly, DeglexLess> rules_;
    int max_lhs_len_ = 2;

    // leftmost, then shortest, occurrence of a rule lhs inside w
    std::optional<std::pair<size_t, const Word*>> find_redex(const Word& w) const;
    friend RewriteSystem truncated_completion(const RewriteSystem&, int, size_t);
};

// Extract the reduced rule set of a quadratic presentation: row-reduce R
// against descending deglex so every pivot (the relation's largest word)
// becomes a leading word. |rules| = dim R.
RewriteSystem build_rewriting_system(const QuadPresentation& p, const MonomialOrder& order);

// Adjoin rules for unresolved overlaps of composite degree <= maxdeg; counts
// through maxdeg-1 are exact afterwards. Throws BudgetExceeded past the rule cap.
RewriteSystem truncated_completion(const RewriteSystem& rs, int maxdeg, size_t max_rules = 60000);

// first N+1 coefficients of 1/p(-t); p given by exact coefficients, p[0] = 1
std::vector<Rat> series_inverse(const std::vector<Rat>& p, int N);

// coefficients 0..N of P(t) * Pdual(-t)
std::vector<Rat> koszul_product(const std::vector<Rat>& p, const std::vector<Rat>& pdual, int N);

}  // namespace ybalg
