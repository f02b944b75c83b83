#pragma once

#include "quiverkac/kac.hpp"

namespace qk {

struct SplitResult {
    Quiver new_quiver;
    std::string new_vertex;
    std::string arrow_b;  // t(a) -> v
    std::string arrow_c;  // v -> h(a)
};

// Replace arrow a by t(a) -> v -> h(a) through a fresh vertex v.  Fresh
// names: v = "v#<k>" with k the smallest index avoiding a clash,
// b = "<a>.b", c = "<a>.c".
SplitResult split_arrow(const Quiver& q, const std::string& arrow_id);

// (m, count) with m = max over a in M of min(alpha_t, alpha_h) and count the
// number of arrows attaining it.  The lexicographic induction measure of the
// rank recursion.
std::pair<int, int> induction_measure(const Quiver& q, const std::vector<std::string>& m_arrows,
                                      const DimVector& alpha);

enum class ArrowChoice { SmallestDeclared, LargestDeclared };

struct MaxrankOptions {
    Budgets budgets;
    PolyCache* cache = nullptr;            // base-case Kac cache
    ArrowChoice choice = ArrowChoice::SmallestDeclared;
    bool cross_check_choice = false;       // recompute with the other choice rule
};

// A^M_{Q,alpha}: Kac polynomial when M is empty, otherwise the rank
// stratification recursion over the split quiver.
IntPolynomial maxrank_polynomial(const Quiver& q, const std::vector<std::string>& m_arrows,
                                 const DimVector& alpha, const MaxrankOptions& opts = {});

}  // namespace qk
