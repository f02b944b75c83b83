#pragma once

#include "quiverkac/maxrank.hpp"
#include "quiverkac/oracle.hpp"
#include "quiverkac/relation.hpp"

namespace qk {

// Auxiliary quiver with one extra vertex per *-orbit.  Arrow a of the graph
// becomes a' pointing into the orbit vertex when phi(a)=1 and out of it when
// phi(a)=0.
struct DeltaQuiver {
    Quiver quiver;
    std::vector<std::string> orbit_vertices;  // per orbit, name "[<edge id>]"
    std::vector<std::string> arrow_names;     // per graph arrow, name "<id>'"
};

DeltaQuiver delta_quiver(const EquippedGraph& eg);

// Sum over extensions alpha' of alpha to the orbit vertices (bounded by
// min(alpha_tail, alpha_head) per orbit) of the maximal-rank polynomial of
// the Delta quiver with every arrow constrained.
IntPolynomial equipped_count_polynomial(const EquippedGraph& eg, const DimVector& alpha,
                                        const MaxrankOptions& opts = {});

struct TermReport {
    DimVector alpha_prime;  // in the Delta quiver's vertex order
    IntPolynomial value;
};

// Same sum, returning each summand.
std::vector<TermReport> equipped_count_terms(const EquippedGraph& eg, const DimVector& alpha,
                                             const MaxrankOptions& opts = {});

// Equivalence with maximal-rank Delta representations: relations factor
// through their rank; arrows into orbit vertices are surjective, arrows out
// of them injective.
QuiverRep equipped_rep_to_delta(const EquippedGraph& eg, const EquippedRep& rep);
EquippedRep delta_rep_to_equipped(const EquippedGraph& eg, const QuiverRep& delta_rep);

}  // namespace qk
