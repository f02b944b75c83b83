#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quiverkac/field.hpp"

namespace qk {

// Dense matrix over a small finite field.  Zero-dimensional shapes are legal
// and represent maps to or from the zero space.
class FqMatrix {
public:
    FqMatrix() : F_(&FieldSpec::get(2)), rows_(0), cols_(0) {}
    FqMatrix(const FieldSpec& F, int rows, int cols)
        : F_(&F), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static FqMatrix identity(const FieldSpec& F, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return *F_; }

    Fq operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    Fq& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<Fq>& data() const { return e_; }
    std::vector<Fq>& data() { return e_; }

    FqMatrix operator*(const FqMatrix& rhs) const;
    FqMatrix operator+(const FqMatrix& rhs) const;
    FqMatrix operator-(const FqMatrix& rhs) const;
    FqMatrix scaled(Fq c) const;
    FqMatrix transposed() const;
    bool operator==(const FqMatrix& rhs) const;
    bool operator!=(const FqMatrix& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_invertible() const;
    FqMatrix inverse() const;  // DomainError if singular

    // stack rhs to the right / below; shapes must agree
    FqMatrix hcat(const FqMatrix& rhs) const;
    FqMatrix vcat(const FqMatrix& rhs) const;
    FqMatrix block(int r0, int c0, int nr, int nc) const;

    std::string to_string() const;

private:
    const FieldSpec* F_;
    int rows_, cols_;
    std::vector<Fq> e_;
};

struct RrefResult {
    FqMatrix mat;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per nonzero row
};

RrefResult rref(const FqMatrix& m);
int rank(const FqMatrix& m);

// A subspace of F_q^n in canonical form: basis rows in RREF, no zero rows.
// Canonicality makes operator== decide subspace equality.
class Subspace {
public:
    Subspace() = default;
    // from spanning rows (reduced internally)
    Subspace(const FieldSpec& F, int ambient_dim, const FqMatrix& spanning_rows);
    static Subspace zero(const FieldSpec& F, int ambient_dim);
    static Subspace full(const FieldSpec& F, int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const FqMatrix& basis() const { return basis_; }
    const FieldSpec& field() const { return basis_.field(); }

    bool contains(const std::vector<Fq>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }
    bool operator<(const Subspace& rhs) const;

    // rows form a basis of {f : f.v = 0 for all v in the subspace}
    FqMatrix annihilator() const;

private:
    int ambient_ = 0;
    FqMatrix basis_;  // dim x ambient, RREF
};

// Solution space {x : m x = 0}, canonical.
Subspace nullspace(const FqMatrix& m);

// Row space of m, canonical.
Subspace row_space(const FqMatrix& m);

// All matrices of the given shape (optionally only those of the given rank),
// entries running through the field's canonical element order, row-major,
// first entry slowest.  fn returns false to stop early.
void enumerate_matrices(const FieldSpec& F, int rows, int cols, std::optional<int> rank_filter,
                        const std::function<bool(const FqMatrix&)>& fn);

// All subspaces of F_q^n of dimension d (or every dimension if d is empty),
// each exactly once via its RREF pattern.  Deterministic order.
void enumerate_subspaces(const FieldSpec& F, int n, std::optional<int> d,
                         const std::function<bool(const Subspace&)>& fn);

// Gaussian binomial [n choose d]_q, by the product formula.
long long gaussian_binomial(int n, int d, int q);

}  // namespace qk
