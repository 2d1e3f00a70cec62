// Canonical subspaces of Q^n: the basis is the reduced row echelon form of the
// row space, so subspace equality is basis-list equality.
#pragma once

#include <cstdint>
#include <vector>

#include "ybalg/elimination.hpp"
#include "ybalg/sparse.hpp"

namespace ybalg {

enum class Pairing { Straight, Reversed };

class Subspace {
public:
    explicit Subspace(int64_t ambient) : ambient_(ambient) {}
    static Subspace from_rows(int64_t ambient, std::vector<RatVec> rows);
    static Subspace full(int64_t ambient);

    int64_t ambient() const { return ambient_; }
    int64_t dim() const { return static_cast<int64_t>(basis_.size()); }
    const std::vector<RatVec>& basis() const { return basis_; }
    const std::vector<int64_t>& pivots() const { return pivots_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    int64_t ambient_;
    std::vector<RatVec> basis_;   // canonical RREF rows, sorted by pivot column
    std::vector<int64_t> pivots_;
};

int64_t rank(const SparseMatrix& m);
int64_t rank_mod(const SparseMatrix& m, uint64_t prime = kDefaultPrime);

// null space {x : m x = 0} as a canonical subspace of Q^cols
Subspace kernel(const SparseMatrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);

// All functionals vanishing on `a`, expressed in dual coordinates. `pairing`
// fixes which dual coordinate pairs with which primal coordinate on a tensor
// square of `tensor_dim` generators: Straight pairs (i,j) with (i,j)*,
// Reversed pairs (i,j) with (j,i)*. For plain ambients use Straight.
Subspace annihilator(const Subspace& a, Pairing pairing, int64_t tensor_dim = 0);

// the antisymmetric part of the tensor square of a dim-d space, inside Q^(d*d)
Subspace wedge_square(int64_t d);

}  // namespace ybalg
