#pragma once

#include <tuple>

#include "quiverkac/matrix.hpp"

namespace qk {

// Subspace R of V (+) W, first block V of dimension dim_v, second block W of
// dimension dim_w.  Stored canonically via the subspace RREF form.
struct LinearRelation {
    int dim_v = 0;
    int dim_w = 0;
    Subspace space;

    LinearRelation() = default;
    LinearRelation(int dv, int dw, Subspace s);

    LinearRelation opposite() const;  // swap the V and W blocks
    bool operator==(const LinearRelation& rhs) const {
        return dim_v == rhs.dim_v && dim_w == rhs.dim_w && space == rhs.space;
    }
    bool operator!=(const LinearRelation& rhs) const { return !(*this == rhs); }
    bool operator<(const LinearRelation& rhs) const {
        return std::tie(dim_v, dim_w, space) < std::tie(rhs.dim_v, rhs.dim_w, rhs.space);
    }
};

struct RelationInvariants {
    Subspace ker;  // {v : (v,0) in R}        in V
    Subspace def;  // projection of R to V    in V
    Subspace ind;  // {w : (0,w) in R}        in W
    Subspace ima;  // projection of R to W    in W
    int rank = 0;  // dim def - dim ker = dim ima - dim ind
};

RelationInvariants relation_invariants(const LinearRelation& r);

// Type (r,s): r=0 demands Ker R = 0, r=1 demands Def R = V;
//             s=0 demands Ind R = 0, s=1 demands Ima R = W.
struct RelationType {
    int r = 0;
    int s = 0;
};

bool check_type(const LinearRelation& rel, RelationType t);

// Build the relation from a pair of rank-d maps in the configuration for the
// type.  Shapes (U of dimension d):
//   r=0: a is dim_v x d, injective (U -> V);   r=1: a is d x dim_v, surjective
//   s=0: b is dim_w x d, injective (U -> W);   s=1: b is d x dim_w, surjective
LinearRelation pair_to_relation(RelationType t, const FqMatrix& a, const FqMatrix& b, int dim_v,
                                int dim_w);

struct RelationFactorization {
    int d = 0;
    FqMatrix a, b;
};

// Deterministic representative of the GL(U)-orbit of pairs realizing R;
// pair_to_relation on the output reproduces R exactly.
RelationFactorization relation_to_pair(const LinearRelation& rel, RelationType t);

}  // namespace qk
