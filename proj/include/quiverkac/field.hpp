#pragma once

#include <cstdint>
#include <vector>

namespace qk {

using Fq = std::uint8_t;  // field element, encoded 0..q-1

// Arithmetic tables for a small finite field F_q, q = p^k.
//
// Elements are encoded as 0..q-1; for extension fields the encoding is the
// base-p digit expansion of the coefficient vector of the residue polynomial
// (constant term = least significant digit).  Supported sizes: 2,3,4,5,7,8,9.
class FieldSpec {
public:
    int q;
    int p;
    int k;

    Fq add(Fq a, Fq b) const { return add_[a * q + b]; }
    Fq sub(Fq a, Fq b) const { return add_[a * q + neg_[b]]; }
    Fq mul(Fq a, Fq b) const { return mul_[a * q + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const;  // DomainError on 0

    // Canonical enumeration order: 0, 1, then powers of the generator.
    const std::vector<Fq>& order() const { return order_; }
    Fq generator() const { return gen_; }

    // Shared immutable instance; SchemaError for unsupported q.
    static const FieldSpec& get(int q);

private:
    explicit FieldSpec(int q);

    std::vector<Fq> add_, mul_, neg_, inv_;
    std::vector<Fq> order_;
    Fq gen_ = 0;
};

bool field_supported(int q);

// Supported sizes with primes first, then prime powers, each group ascending.
// This is the evaluation-point schedule for polynomial interpolation.
const std::vector<int>& field_sizes_primes_first();

}  // namespace qk
