#pragma once

#include <string>
#include <vector>

#include "quiverkac/quiver.hpp"

namespace qk {

enum class RootTag { NotRoot, Real, Imaginary };

struct RootClass {
    RootTag tag = RootTag::NotRoot;
    std::vector<std::string> witness;  // reflection vertices applied during descent
};

const char* to_string(RootTag t);

// Simple reflection s_i(alpha) = alpha - (alpha,e_i) e_i at a loop-free
// vertex.  The result may have negative entries.
DimVector reflect(const Quiver& q, const DimVector& alpha, int vertex_idx);

// Reflection descent.  The root system depends only on the underlying graph,
// so any orientation may be passed.
RootClass classify_root(const Quiver& q, const DimVector& alpha);

// All alpha with 0 < sum(alpha) <= height_bound that are roots, in
// lexicographic order of the dimension vector.
std::vector<std::pair<DimVector, RootClass>> enumerate_positive_roots(const Quiver& q,
                                                                      int height_bound);

}  // namespace qk
