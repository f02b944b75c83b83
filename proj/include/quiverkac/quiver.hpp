#pragma once

#include <string>
#include <vector>

#include "quiverkac/errors.hpp"

namespace qk {

struct Arrow {
    std::string id;
    std::string tail;
    std::string head;
};

// Finite directed multigraph; loops and parallel arrows allowed.  The
// declared orderings of vertices and arrows are the deterministic orderings
// used everywhere downstream.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const;  // SchemaError if unknown
    int arrow_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const;
    bool has_loop_at(int vertex_idx) const;

    void validate() const;  // invariants: unique ids, declared endpoints
    std::string serialize() const;  // canonical string form, used as cache key
};

// Dimension vector, aligned with the declared vertex order.
using DimVector = std::vector<int>;

void check_dims(const Quiver& q, const DimVector& alpha);

// Graph = quiver plus fixed-point free involution on arrows exchanging heads
// and tails.
struct GraphWithInvolution {
    Quiver g;
    std::vector<int> involution;  // arrow index -> arrow index

    void validate() const;
    // *-orbits as (i, involution[i]) pairs with i the smaller declared index
    std::vector<std::pair<int, int>> orbits() const;
};

struct EquippedGraph {
    GraphWithInvolution graph;
    std::vector<int> phi;  // per arrow, 0 or 1

    void validate() const;
};

// Tits quadratic form sum_i a_i^2 - sum_arrows a_tail * a_head.
long long quadratic_form(const Quiver& q, const DimVector& alpha);
// Symmetrization q(a+b) - q(a) - q(b).
long long bilinear_form(const Quiver& q, const DimVector& alpha, const DimVector& beta);

// Double every arrow of Q with a reversed partner a*, involution a <-> a*.
GraphWithInvolution doubled_graph(const Quiver& q);

struct OrientResult {
    Quiver quiver;
    std::vector<int> phi;  // canonical equipping of the source graph: 1 on
                           // chosen arrows, 0 on their partners (indexed by
                           // the source graph's arrows)
};

// Select one arrow per *-orbit; the chosen arrows form the result quiver.
OrientResult orient(const GraphWithInvolution& g, const std::vector<std::string>& choice);
// Canonical choice: the smaller-indexed arrow of each orbit.
OrientResult orient_canonical(const GraphWithInvolution& g);

bool support_connected(const Quiver& q, const DimVector& alpha);

// Plain-text one-line depiction, for error messages and --output text.
std::string depict(const Quiver& q);

}  // namespace qk
