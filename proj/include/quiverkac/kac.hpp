#pragma once

#include "quiverkac/cache.hpp"
#include "quiverkac/oracle.hpp"
#include "quiverkac/polynomial.hpp"
#include "quiverkac/quiver.hpp"

namespace qk {

// A computed polynomial failed the monic / degree consistency check.
struct NotMonic : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};
struct WrongDegree : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

std::string kac_cache_key(const Quiver& q, const DimVector& alpha);

// Kac polynomial A_{Q,alpha}: zero for non-roots; otherwise oracle counts at
// enough field sizes, exact interpolation at degree bound 1 - q_Q(alpha),
// one surplus verification point, and a monic/degree assertion.
IntPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha,
                             const Budgets& budgets = {}, PolyCache* cache = nullptr);

}  // namespace qk
