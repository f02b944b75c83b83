#include "quiverkac/kac.hpp"

#include <sstream>

#include "quiverkac/roots.hpp"

namespace qk {

std::string kac_cache_key(const Quiver& q, const DimVector& alpha) {
    std::ostringstream os;
    os << q.serialize() << "alpha:";
    for (int x : alpha) os << x << ",";
    return os.str();
}

IntPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha, const Budgets& budgets,
                             PolyCache* cache) {
    check_dims(q, alpha);
    std::string key;
    if (cache) {
        key = kac_cache_key(q, alpha);
        if (auto hit = cache->get(key)) return *hit;
    }

    IntPolynomial result;
    if (classify_root(q, alpha).tag == RootTag::NotRoot) {
        result = IntPolynomial();
    } else {
        long long degree = 1 - quadratic_form(q, alpha);
        if (degree < 0)
            throw ConsistencyError("positive root with 1-q(alpha) negative");
        const std::vector<int>& sizes = field_sizes_primes_first();
        size_t need = static_cast<size_t>(degree) + 2;  // interpolation + surplus
        if (need > sizes.size())
            throw ResourceError("degree " + std::to_string(degree) +
                                " needs more evaluation points than supported field sizes");
        std::vector<std::pair<long long, long long>> points;
        for (size_t i = 0; i < need; ++i) {
            const FieldSpec& f = FieldSpec::get(sizes[i]);
            points.emplace_back(sizes[i], count_abs_indec_quiver(q, alpha, {}, f, budgets));
        }
        result = interpolate(points, static_cast<int>(degree));
        if (result.degree() != degree)
            throw WrongDegree("Kac polynomial " + result.pretty() + " has degree " +
                              std::to_string(result.degree()) + ", expected " +
                              std::to_string(degree));
        if (!result.is_monic())
            throw NotMonic("Kac polynomial " + result.pretty() + " is not monic");
    }

    if (cache) cache->put(key, result);
    return result;
}

}  // namespace qk
