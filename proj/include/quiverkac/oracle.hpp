#pragma once

#include <vector>

#include "quiverkac/matrix.hpp"
#include "quiverkac/quiver.hpp"
#include "quiverkac/relation.hpp"

namespace qk {

struct Budgets {
    long long max_points = 1000000;   // representation points to enumerate
    long long max_group = 1000000;    // |GL(alpha)|
    int max_end_dim = 8;              // dim End(X) for the locality test
    long long max_end_elems = 1000000;  // q^{dim End}
};

// Representation of a quiver: one alpha_h x alpha_t matrix per arrow, in the
// quiver's declared arrow order.
struct QuiverRep {
    const FieldSpec* field = nullptr;
    DimVector dims;
    std::vector<FqMatrix> maps;
};

// Representation of an equipped graph: one type-valid relation per *-orbit,
// stored for the orbit representative a (the smaller declared index); the
// partner a* carries the opposite relation implicitly.
struct EquippedRep {
    const FieldSpec* field = nullptr;
    DimVector dims;
    std::vector<LinearRelation> relations;  // aligned with graph.orbits()
};

// Morphism component maps theta_i, one per vertex.
using RepMorphism = std::vector<FqMatrix>;

std::vector<RepMorphism> endomorphism_algebra(const Quiver& q, const QuiverRep& rep);
std::vector<RepMorphism> endomorphism_algebra(const EquippedGraph& eg, const EquippedRep& rep);

struct EndAnalysis {
    int dim = 0;          // dim End(X)
    bool local = false;   // non-units form an additive subgroup
    int radical_dim = 0;  // dim of the non-unit subspace, when local
    int residue_degree() const { return dim - radical_dim; }
};

// Exhaustive analysis of the algebra spanned by the given morphism basis,
// acting on the representation's total space.
EndAnalysis analyze_end(const std::vector<RepMorphism>& basis, const FieldSpec& f,
                        const Budgets& budgets);

// End(X) local with residue field F_q.
bool is_absolutely_indecomposable(const Quiver& q, const QuiverRep& rep, const Budgets& budgets);
bool is_absolutely_indecomposable(const EquippedGraph& eg, const EquippedRep& rep,
                                  const Budgets& budgets);

enum class SweepOrder { Forward, Reversed };

// GL(alpha)-orbit count of absolutely indecomposable (optionally M-maximal)
// representations, by full enumeration and orbit sweep.
long long count_abs_indec_quiver(const Quiver& q, const DimVector& alpha,
                                 const std::vector<std::string>& max_rank_arrows,
                                 const FieldSpec& f, const Budgets& budgets = {},
                                 SweepOrder order = SweepOrder::Forward);

long long count_abs_indec_equipped(const EquippedGraph& eg, const DimVector& alpha,
                                   const FieldSpec& f, const Budgets& budgets = {},
                                   SweepOrder order = SweepOrder::Forward);

}  // namespace qk
