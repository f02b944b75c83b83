#include "quiverkac/roots.hpp"

#include <algorithm>
#include <numeric>

namespace qk {

const char* to_string(RootTag t) {
    switch (t) {
        case RootTag::NotRoot: return "not_root";
        case RootTag::Real: return "real";
        case RootTag::Imaginary: return "imaginary";
    }
    return "?";
}

namespace {

DimVector unit(size_t n, int i) {
    DimVector e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

DimVector reflect(const Quiver& q, const DimVector& alpha, int vertex_idx) {
    if (q.has_loop_at(vertex_idx))
        throw DomainError("reflection at loop vertex '" + q.vertices[vertex_idx] + "'");
    long long pairing = bilinear_form(q, alpha, unit(alpha.size(), vertex_idx));
    DimVector out = alpha;
    out[vertex_idx] -= static_cast<int>(pairing);
    return out;
}

RootClass classify_root(const Quiver& q, const DimVector& alpha) {
    check_dims(q, alpha);
    RootClass rc;
    DimVector a = alpha;
    size_t n = a.size();
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) return rc;
    if (!support_connected(q, a)) return rc;

    std::vector<bool> loop_free(n);
    for (size_t i = 0; i < n; ++i) loop_free[i] = !q.has_loop_at(static_cast<int>(i));

    for (;;) {
        // simple root at a loop-free vertex?
        for (size_t i = 0; i < n; ++i)
            if (loop_free[i] && a[i] == 1 &&
                std::accumulate(a.begin(), a.end(), 0) == 1) {
                rc.tag = RootTag::Real;
                return rc;
            }
        int pick = -1;
        for (size_t i = 0; i < n; ++i) {
            if (!loop_free[i]) continue;
            if (bilinear_form(q, a, unit(n, static_cast<int>(i))) > 0) {
                pick = static_cast<int>(i);
                break;
            }
        }
        if (pick < 0) {
            // fundamental region if the support is still connected
            rc.tag = support_connected(q, a) ? RootTag::Imaginary : RootTag::NotRoot;
            return rc;
        }
        a = reflect(q, a, pick);
        rc.witness.push_back(q.vertices[pick]);
        if (std::any_of(a.begin(), a.end(), [](int x) { return x < 0; })) {
            rc.tag = RootTag::NotRoot;
            return rc;
        }
    }
}

std::vector<std::pair<DimVector, RootClass>> enumerate_positive_roots(const Quiver& q,
                                                                      int height_bound) {
    if (height_bound < 1) throw DomainError("height bound must be >= 1");
    size_t n = q.vertices.size();
    std::vector<std::pair<DimVector, RootClass>> out;
    DimVector a(n, 0);
    // odometer over 0..height_bound per entry, lexicographic, first entry slowest
    for (;;) {
        int total = std::accumulate(a.begin(), a.end(), 0);
        if (total >= 1 && total <= height_bound) {
            RootClass rc = classify_root(q, a);
            if (rc.tag != RootTag::NotRoot) out.emplace_back(a, rc);
        }
        int i = static_cast<int>(n);
        for (;;) {
            if (i == 0) return out;
            --i;
            if (++a[i] <= height_bound) break;
            a[i] = 0;
        }
    }
}

}  // namespace qk
