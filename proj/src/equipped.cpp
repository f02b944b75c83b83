#include "quiverkac/equipped.hpp"

#include <algorithm>

namespace qk {

DeltaQuiver delta_quiver(const EquippedGraph& eg) {
    eg.validate();
    const Quiver& g = eg.graph.g;
    auto orbits = eg.graph.orbits();

    DeltaQuiver out;
    out.quiver.vertices = g.vertices;
    std::vector<int> orbit_of(g.arrows.size());
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        std::string name = "[" + g.arrows[orbits[oi].first].id + "]";
        out.orbit_vertices.push_back(name);
        out.quiver.vertices.push_back(name);
        orbit_of[orbits[oi].first] = static_cast<int>(oi);
        orbit_of[orbits[oi].second] = static_cast<int>(oi);
    }
    for (size_t ai = 0; ai < g.arrows.size(); ++ai) {
        const Arrow& a = g.arrows[ai];
        std::string name = a.id + "'";
        out.arrow_names.push_back(name);
        const std::string& ov = out.orbit_vertices[orbit_of[ai]];
        if (eg.phi[ai] == 1)
            out.quiver.arrows.push_back({name, a.tail, ov});
        else
            out.quiver.arrows.push_back({name, ov, a.tail});
    }
    out.quiver.validate();
    return out;
}

std::vector<TermReport> equipped_count_terms(const EquippedGraph& eg, const DimVector& alpha,
                                             const MaxrankOptions& opts) {
    const Quiver& g = eg.graph.g;
    check_dims(g, alpha);
    DeltaQuiver delta = delta_quiver(eg);
    auto orbits = eg.graph.orbits();

    std::vector<int> bound;
    for (auto [i, j] : orbits) {
        const Arrow& a = g.arrows[i];
        bound.push_back(std::min(alpha[g.vertex_index(a.tail)], alpha[g.vertex_index(a.head)]));
    }
    std::vector<std::string> all_arrows = delta.arrow_names;

    std::vector<TermReport> out;
    std::vector<int> ext(orbits.size(), 0);
    for (;;) {
        DimVector alpha_prime = alpha;
        for (int d : ext) alpha_prime.push_back(d);
        out.push_back({alpha_prime, maxrank_polynomial(delta.quiver, all_arrows, alpha_prime, opts)});
        size_t i = ext.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++ext[i] <= bound[i]) {
                done = false;
                break;
            }
            ext[i] = 0;
        }
        if (done || ext.empty()) break;
    }
    return out;
}

IntPolynomial equipped_count_polynomial(const EquippedGraph& eg, const DimVector& alpha,
                                        const MaxrankOptions& opts) {
    IntPolynomial sum;
    for (const TermReport& t : equipped_count_terms(eg, alpha, opts)) sum = sum + t.value;
    return sum;
}

QuiverRep equipped_rep_to_delta(const EquippedGraph& eg, const EquippedRep& rep) {
    const Quiver& g = eg.graph.g;
    auto orbits = eg.graph.orbits();
    DeltaQuiver delta = delta_quiver(eg);

    QuiverRep out;
    out.field = rep.field;
    out.dims = rep.dims;
    std::vector<RelationFactorization> facts;
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        RelationType ty{eg.phi[orbits[oi].first], eg.phi[orbits[oi].second]};
        facts.push_back(relation_to_pair(rep.relations[oi], ty));
        out.dims.push_back(facts.back().d);
    }
    std::vector<int> orbit_of(g.arrows.size());
    std::vector<bool> is_rep(g.arrows.size(), false);
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        orbit_of[orbits[oi].first] = static_cast<int>(oi);
        orbit_of[orbits[oi].second] = static_cast<int>(oi);
        is_rep[orbits[oi].first] = true;
    }
    for (size_t ai = 0; ai < g.arrows.size(); ++ai) {
        const RelationFactorization& fc = facts[orbit_of[ai]];
        // the representative's half carries the V-side map, the partner's the W-side
        out.maps.push_back(is_rep[ai] ? fc.a : fc.b);
    }
    return out;
}

EquippedRep delta_rep_to_equipped(const EquippedGraph& eg, const QuiverRep& delta_rep) {
    const Quiver& g = eg.graph.g;
    auto orbits = eg.graph.orbits();

    EquippedRep out;
    out.field = delta_rep.field;
    out.dims.assign(delta_rep.dims.begin(), delta_rep.dims.begin() + g.vertices.size());
    for (size_t oi = 0; oi < orbits.size(); ++oi) {
        auto [i, j] = orbits[oi];
        RelationType ty{eg.phi[i], eg.phi[j]};
        const Arrow& a = g.arrows[i];
        int dv = out.dims[g.vertex_index(a.tail)];
        int dw = out.dims[g.vertex_index(a.head)];
        out.relations.push_back(
            pair_to_relation(ty, delta_rep.maps[i], delta_rep.maps[j], dv, dw));
    }
    return out;
}

}  // namespace qk
