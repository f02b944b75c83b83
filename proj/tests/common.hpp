#pragma once

#include "quiverkac/quiver.hpp"

namespace qk::testing {

// 1 --a--> 2
inline Quiver a2() { return {{"1", "2"}, {{"a", "1", "2"}}}; }

// 1 <--a-- 2
inline Quiver a2_reversed() { return {{"1", "2"}, {{"a", "2", "1"}}}; }

// two parallel arrows 1 -> 2
inline Quiver kronecker() { return {{"1", "2"}, {{"a1", "1", "2"}, {"a2", "1", "2"}}}; }

// one vertex, one loop
inline Quiver jordan() { return {{"1"}, {{"a", "1", "1"}}}; }

// path on three vertices; orientation bits give the four orientations
inline Quiver a3(bool first_forward = true, bool second_forward = true) {
    Quiver q{{"1", "2", "3"}, {}};
    q.arrows.push_back(first_forward ? Arrow{"a", "1", "2"} : Arrow{"a", "2", "1"});
    q.arrows.push_back(second_forward ? Arrow{"b", "2", "3"} : Arrow{"b", "3", "2"});
    return q;
}

// two isolated vertices with one loose edge each vertex pairless
inline Quiver disjoint_a1_a1() { return {{"1", "2"}, {}}; }

// one edge with the given equipping bits
inline EquippedGraph single_edge(int phi_a, int phi_astar) {
    EquippedGraph eg;
    eg.graph.g = {{"1", "2"}, {{"e", "1", "2"}, {"e*", "2", "1"}}};
    eg.graph.involution = {1, 0};
    eg.phi = {phi_a, phi_astar};
    return eg;
}

// path 1 - 2 - 3 as a graph, with equipping bits per half-edge
inline EquippedGraph two_edge_path(int p1, int p1s, int p2, int p2s) {
    EquippedGraph eg;
    eg.graph.g = {{"1", "2", "3"},
                  {{"e1", "1", "2"}, {"e2", "2", "3"}, {"e1*", "2", "1"}, {"e2*", "3", "2"}}};
    eg.graph.involution = {2, 3, 0, 1};
    eg.phi = {p1, p2, p1s, p2s};
    return eg;
}

}  // namespace qk::testing
