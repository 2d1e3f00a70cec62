// Per-group bundle of the four presentations, and the structural reduction
// algorithm for dual words: split a word along the connected components of its
// index graph and canonicalize two-letter products against the degree-2 class
// structure of the dual, tracking signs.
#pragma once

#include <utility>
#include <vector>

#include "ybalg/braided.hpp"
#include "ybalg/quadratic.hpp"
#include "ybalg/rewriting.hpp"

namespace ybalg {

struct YbAlgebra {
    GroupSpec spec;
    BraidedSpace space;
    QuadPresentation quad_cover;  // T(V)/<ker(Id+Psi)>
    QuadPresentation envelope;    // the enveloping algebra: antisymmetric part
    QuadPresentation dual_straight;
    QuadPresentation dual_reversed;
};

YbAlgebra build_yb(const GroupSpec& spec, RSquareSign rsq = RSquareSign::CommutesWithSelf);

// A word in the dual of an enveloping presentation reduces to a single signed
// monomial or zero: every degree-2 class is spanned by one monomial. The
// reducer repeatedly replaces the first two-letter product (not necessarily
// adjacent; intervening letters anticommute past it) that is not the
// deglex-least representative of its class.
class DualReducer {
public:
    DualReducer(const QuadPresentation& envelope, Pairing convention, const MonomialOrder& order);

    struct Result {
        Rat coeff;               // zero iff the word dies
        std::vector<int> word;   // generator indices, empty when coeff == 0
    };
    Result reduce(const std::vector<int>& word) const;

    // class data for a two-letter product: word (a,b) equals coeff * canonical
    struct PairClass {
        bool zero = false;
        Rat coeff;
        int a = -1, b = -1;
    };
    const PairClass& pair_class(int a, int b) const { return table_[static_cast<size_t>(a) * d_ + b]; }

private:
    int d_;
    MonomialOrder order_;
    std::vector<PairClass> table_;
};

}  // namespace ybalg
