#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiverkac/errors.hpp"

namespace qk {

// Interpolation produced a non-integral coefficient; indicates a counting
// bug or a wrong degree bound.
struct NonIntegerCoefficients : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

// A surplus evaluation point disagreed with the interpolant.
struct SurplusMismatch : ConsistencyError {
    using ConsistencyError::ConsistencyError;
};

// Polynomial in one variable with exact integer coefficients, ascending
// degree, no trailing zeros (empty = zero polynomial).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs);
    static IntPolynomial constant(long long c);
    static IntPolynomial monomial(long long c, int deg);

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    long long leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }

    long long eval(long long q) const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const IntPolynomial& rhs) const { return c_ != rhs.c_; }

    std::string pretty() const;  // "q^2+3q+1"

private:
    std::vector<long long> c_;
};

// Unique polynomial of degree <= degree_bound through the first
// degree_bound+1 points (exact rational Lagrange); any surplus points are
// checked, not fitted.  Throws NonIntegerCoefficients / SurplusMismatch.
IntPolynomial interpolate(const std::vector<std::pair<long long, long long>>& points,
                          int degree_bound);

}  // namespace qk
