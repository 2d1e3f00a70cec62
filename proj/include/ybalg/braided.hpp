// The braided vector space Y_G: one basis vector per reflection, the group
// acting through the case tables of the series, the coaction assigning each
// generator its reflection, and the braiding
//     Psi(a (x) b) = (deg(a) |> b) (x) a.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybalg/group.hpp"
#include "ybalg/labels.hpp"
#include "ybalg/sparse.hpp"

namespace ybalg {

// Sign of the action of a short-root generator on its own r-label. The case
// tables never pin this down; CommutesWithSelf keeps r(k)^2 out of the
// quadratic kernel, NegatesSelf puts it in. The degree-2 antisymmetric part is
// identical either way.
enum class RSquareSign { CommutesWithSelf, NegatesSelf };

struct SignedLabel {
    int sign;  // +1 or -1
    GenLabel label;
};

class BraidedSpace {
public:
    BraidedSpace(GroupSpec spec, RSquareSign rsq = RSquareSign::CommutesWithSelf);

    const GroupSpec& spec() const { return spec_; }
    RSquareSign r_square_sign() const { return rsq_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<GenLabel>& basis() const { return basis_; }
    int index_of(const GenLabel& l) const;

    // degree / coaction: the reflection attached to a generator
    const SignedPerm& coaction(const GenLabel& l) const;
    const SignedPerm& coaction(int idx) const { return degrees_[idx]; }

    // group action extended to arbitrary elements by a fixed factorization
    // into the case-table generators
    SignedLabel act(const SignedPerm& g, const GenLabel& v) const;
    std::pair<int, int> act(const SignedPerm& g, int idx) const;

    // Psi(e_a (x) e_b) = sign * e_c (x) e_d; returns (sign, (c, d))
    std::pair<int, std::pair<int, int>> braid_pair(int a, int b) const;

    // Psi as a signed permutation matrix on the dim^2 pair basis (a,b) -> a*dim+b
    SparseMatrix braiding_matrix() const;

    bool check_braid_relation() const;
    bool check_yd_condition() const;

private:
    GroupSpec spec_;
    RSquareSign rsq_;
    std::vector<GenLabel> basis_;
    std::vector<SignedPerm> degrees_;
    std::vector<std::vector<std::pair<int, int>>> refl_action_;  // [refl idx][label idx] -> (sign, label idx)

    SignedLabel act_transposition(int k, int l, const GenLabel& v) const;
    SignedLabel act_double(int k, int l, const GenLabel& v) const;
    SignedLabel act_short(int k, const GenLabel& v) const;
};

BraidedSpace build_yd(const GroupSpec& spec, RSquareSign rsq = RSquareSign::CommutesWithSelf);

}  // namespace ybalg
