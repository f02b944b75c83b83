#include "quiverkac/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "quiverkac/errors.hpp"

namespace qk {

namespace {

// Irreducible polynomials used for the extension fields, as coefficient
// digits of x^k (the monic head is implicit):
//   F_4 = F_2[x]/(x^2+x+1), F_8 = F_2[x]/(x^3+x+1), F_9 = F_3[x]/(x^2+1)
std::vector<int> reduction_poly(int q) {
    switch (q) {
        case 4: return {1, 1};     // x^2 = x + 1
        case 8: return {1, 1, 0};  // x^3 = x + 1
        case 9: return {2, 0};     // x^2 = -1 = 2
        default: return {};
    }
}

std::vector<int> digits(int e, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = e % p;
        e /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int e = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) e = e * p + d[i];
    return e;
}

}  // namespace

FieldSpec::FieldSpec(int q_) {
    struct Pk {
        int p, k;
    };
    std::map<int, Pk> supported = {{2, {2, 1}}, {3, {3, 1}}, {4, {2, 2}}, {5, {5, 1}},
                                   {7, {7, 1}}, {8, {2, 3}}, {9, {3, 2}}};
    auto it = supported.find(q_);
    if (it == supported.end())
        throw SchemaError("unsupported field size q=" + std::to_string(q_));
    q = q_;
    p = it->second.p;
    k = it->second.k;

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    const std::vector<int> red = reduction_poly(q);
    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p, k);
        std::vector<int> dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = static_cast<Fq>(undigits(dn, p));
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p, k);
            std::vector<int> ds(k);
            for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = static_cast<Fq>(undigits(ds, p));

            // schoolbook product, then reduce x^k and above via red
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * k - 2; d >= k; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + c * red[i]) % p;
            }
            prod.resize(k);
            mul_[a * q + b] = static_cast<Fq>(undigits(prod, p));
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<Fq>(b);

    // smallest generator of the multiplicative group
    for (int g = 1; g < q && gen_ == 0; ++g) {
        int x = g, n = 1;
        while (x != 1) {
            x = mul_[x * q + g];
            ++n;
        }
        if (n == q - 1) gen_ = static_cast<Fq>(g);
    }
    order_.push_back(0);
    order_.push_back(1);
    Fq x = gen_;
    while (x != 1) {
        order_.push_back(x);
        x = mul_[x * q + gen_];
    }
}

Fq FieldSpec::inv(Fq a) const {
    if (a == 0) throw DomainError("division by zero in F_" + std::to_string(q));
    return inv_[a];
}

const FieldSpec& FieldSpec::get(int q) {
    static std::mutex m;
    static std::map<int, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(q);
    if (it == cache.end())
        it = cache.emplace(q, std::unique_ptr<FieldSpec>(new FieldSpec(q))).first;
    return *it->second;
}

bool field_supported(int q) {
    return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

const std::vector<int>& field_sizes_primes_first() {
    static const std::vector<int> sizes = {2, 3, 5, 7, 4, 8, 9};
    return sizes;
}

}  // namespace qk
