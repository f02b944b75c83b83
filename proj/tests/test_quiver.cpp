#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "common.hpp"
#include "quiverkac/json_io.hpp"
#include "quiverkac/maxrank.hpp"
#include "quiverkac/quiver.hpp"

using namespace qk;
namespace t = qk::testing;

TEST_CASE("quadratic form") {
    CHECK(quadratic_form(t::a2(), {1, 1}) == 1);
    CHECK(quadratic_form(t::a2(), {1, 0}) == 1);
    CHECK(quadratic_form(t::jordan(), {1}) == 0);
    CHECK(quadratic_form(t::kronecker(), {2, 2}) == 0);
    CHECK_THROWS_AS(quadratic_form(t::a2(), {1}), SchemaError);
}

TEST_CASE("bilinear form") {
    CHECK(bilinear_form(t::a2(), {1, 0}, {0, 1}) == -1);
    CHECK(bilinear_form(t::kronecker(), {2, 1}, {0, 0}) == 0);
    CHECK(bilinear_form(t::jordan(), {1}, {1}) == 0);
    SUBCASE("symmetry and (a,a)=2q(a)") {
        for (const Quiver& q : {t::a2(), t::kronecker(), t::jordan()}) {
            size_t n = q.vertices.size();
            DimVector a(n, 2), b(n, 1);
            a[0] = 1;
            CHECK(bilinear_form(q, a, b) == bilinear_form(q, b, a));
            CHECK(bilinear_form(q, a, a) == 2 * quadratic_form(q, a));
        }
    }
}

TEST_CASE("quadratic form is orientation independent") {
    for (bool f1 : {false, true})
        for (bool f2 : {false, true}) {
            Quiver q = t::a3(f1, f2);
            for (int x = 0; x <= 2; ++x)
                for (int y = 0; y <= 2; ++y)
                    for (int z = 0; z <= 2; ++z)
                        CHECK(quadratic_form(q, {x, y, z}) ==
                              quadratic_form(t::a3(), {x, y, z}));
        }
}

TEST_CASE("doubled graph and orientation") {
    SUBCASE("A_2 doubles to one orbit") {
        GraphWithInvolution g = doubled_graph(t::a2());
        g.validate();
        CHECK(g.g.arrows.size() == 2);
        CHECK(g.orbits().size() == 1);
    }
    SUBCASE("Kronecker doubles to two orbits") {
        CHECK(doubled_graph(t::kronecker()).orbits().size() == 2);
    }
    SUBCASE("Jordan loop doubles to two loops in one orbit") {
        GraphWithInvolution g = doubled_graph(t::jordan());
        g.validate();
        CHECK(g.g.arrows.size() == 2);
        CHECK(g.orbits().size() == 1);
        CHECK(g.g.arrows[1].tail == g.g.arrows[1].head);
    }
    SUBCASE("orient o doubled_graph with the canonical choice is the identity") {
        for (const Quiver& q : {t::a2(), t::kronecker(), t::jordan(), t::a3()}) {
            OrientResult o = orient_canonical(doubled_graph(q));
            CHECK(o.quiver.serialize() == q.serialize());
        }
    }
    SUBCASE("choosing the partner reverses A_2") {
        OrientResult o = orient(doubled_graph(t::a2()), {"a*"});
        CHECK(o.quiver.arrows[0].tail == "2");
        CHECK(o.quiver.arrows[0].head == "1");
    }
    SUBCASE("either loop choice gives the Jordan quiver back") {
        GraphWithInvolution g = doubled_graph(t::jordan());
        for (const std::string& id : {"a", "a*"}) {
            OrientResult o = orient(g, {id});
            CHECK(o.quiver.arrows.size() == 1);
            CHECK(o.quiver.arrows[0].tail == o.quiver.arrows[0].head);
        }
    }
    SUBCASE("invalid choices are rejected") {
        GraphWithInvolution g = doubled_graph(t::a2());
        CHECK_THROWS_AS(orient(g, {}), SchemaError);
        CHECK_THROWS_AS(orient(g, {"a", "a*"}), SchemaError);
    }
}

TEST_CASE("support connectivity") {
    CHECK(support_connected(t::a2(), {1, 1}));
    CHECK(support_connected(t::a2(), {1, 0}));
    CHECK_FALSE(support_connected(t::disjoint_a1_a1(), {1, 1}));
    CHECK_FALSE(support_connected(t::a2(), {0, 0}));
    CHECK_FALSE(support_connected(t::a3(), {1, 0, 1}));
}

TEST_CASE("splitting identity for the quadratic form") {
    // q(Q', alpha_d) - q(Q, alpha) = (alpha_h - d)(alpha_t - d)
    for (const Quiver& q : {t::a2(), t::kronecker(), t::jordan(), t::a3()}) {
        for (const Arrow& a : q.arrows) {
            SplitResult s = split_arrow(q, a.id);
            for (int total = 0; total <= 3; ++total) {
                DimVector alpha(q.vertices.size(), 1);
                alpha[0] = total;
                int at = alpha[q.vertex_index(a.tail)];
                int ah = alpha[q.vertex_index(a.head)];
                for (int d = 0; d <= 3; ++d) {
                    DimVector ad = alpha;
                    ad.push_back(d);
                    CHECK(quadratic_form(s.new_quiver, ad) - quadratic_form(q, alpha) ==
                          static_cast<long long>(ah - d) * (at - d));
                }
            }
        }
    }
}

TEST_CASE("JSON round trips") {
    SUBCASE("quiver") {
        nlohmann::json j = quiver_to_json(t::kronecker());
        Quiver q = quiver_from_json(j);
        CHECK(q.serialize() == t::kronecker().serialize());
    }
    SUBCASE("equipped graph") {
        EquippedGraph eg = t::single_edge(1, 0);
        EquippedGraph back = equipped_graph_from_json(equipped_graph_to_json(eg));
        CHECK(back.graph.g.serialize() == eg.graph.g.serialize());
        CHECK(back.phi == eg.phi);
    }
    SUBCASE("schema violations") {
        CHECK_THROWS_AS(quiver_from_json(nlohmann::json{{"vertices", {"1"}}}), SchemaError);
        CHECK_THROWS_AS(
            quiver_from_json(nlohmann::json::parse(
                R"({"vertices":["1"],"arrows":[{"id":"a","tail":"1","head":"2"}]})")),
            SchemaError);
    }
}

TEST_CASE("invariant validation") {
    Quiver dup{{"1", "1"}, {}};
    CHECK_THROWS_AS(dup.validate(), SchemaError);
    GraphWithInvolution bad;
    bad.g = t::a2();
    bad.involution = {0};  // fixed point
    CHECK_THROWS_AS(bad.validate(), SchemaError);
}
