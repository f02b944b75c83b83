#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverkac/errors.hpp"
#include "quiverkac/relation.hpp"

using namespace qk;

namespace {

LinearRelation graph_of(const FieldSpec& f, const FqMatrix& map) {
    // {(v, map v)}
    int m = map.cols(), n = map.rows();
    FqMatrix rows = FqMatrix::identity(f, m).hcat(map.transposed());
    return LinearRelation(m, n, Subspace(f, m + n, rows));
}

}  // namespace

TEST_CASE("relation invariants") {
    const FieldSpec& f2 = FieldSpec::get(2);
    SUBCASE("full relation") {
        LinearRelation r(1, 1, Subspace::full(f2, 2));
        RelationInvariants inv = relation_invariants(r);
        CHECK(inv.ker.dim() == 1);
        CHECK(inv.def.dim() == 1);
        CHECK(inv.ind.dim() == 1);
        CHECK(inv.ima.dim() == 1);
        CHECK(inv.rank == 0);
    }
    SUBCASE("graph of identity") {
        LinearRelation r = graph_of(f2, FqMatrix::identity(f2, 1));
        RelationInvariants inv = relation_invariants(r);
        CHECK(inv.ker.dim() == 0);
        CHECK(inv.def.dim() == 1);
        CHECK(inv.ind.dim() == 0);
        CHECK(inv.ima.dim() == 1);
        CHECK(inv.rank == 1);
    }
    SUBCASE("zero relation") {
        LinearRelation r(1, 1, Subspace::zero(f2, 2));
        RelationInvariants inv = relation_invariants(r);
        CHECK(inv.ker.dim() == 0);
        CHECK(inv.def.dim() == 0);
        CHECK(inv.ind.dim() == 0);
        CHECK(inv.ima.dim() == 0);
        CHECK(inv.rank == 0);
    }
}

TEST_CASE("type checks") {
    const FieldSpec& f3 = FieldSpec::get(3);
    SUBCASE("graphs have type (1,0), opposites type (0,1)") {
        enumerate_matrices(f3, 2, 2, std::nullopt, [&](const FqMatrix& m) {
            LinearRelation g = graph_of(f3, m);
            CHECK(check_type(g, {1, 0}));
            CHECK(check_type(g.opposite(), {0, 1}));
            return true;
        });
    }
    SUBCASE("full relation has type (1,1) but not (0,0)") {
        const FieldSpec& f2 = FieldSpec::get(2);
        LinearRelation r(1, 1, Subspace::full(f2, 2));
        CHECK(check_type(r, {1, 1}));
        CHECK_FALSE(check_type(r, {0, 0}));
    }
}

TEST_CASE("rank and invariants swap under opposite") {
    const FieldSpec& f2 = FieldSpec::get(2);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            enumerate_subspaces(f2, m + n, std::nullopt, [&](const Subspace& s) {
                LinearRelation r(m, n, s);
                RelationInvariants a = relation_invariants(r);
                RelationInvariants b = relation_invariants(r.opposite());
                CHECK(a.rank == b.rank);
                CHECK(a.ker == b.ind);
                CHECK(a.def == b.ima);
                CHECK(a.ind == b.ker);
                CHECK(a.ima == b.def);
                return true;
            });
}

TEST_CASE("pair_to_relation examples") {
    const FieldSpec& f2 = FieldSpec::get(2);
    SUBCASE("type (1,1), a=b=identity gives the diagonal") {
        FqMatrix id = FqMatrix::identity(f2, 1);
        LinearRelation r = pair_to_relation({1, 1}, id, id, 1, 1);
        CHECK(r == graph_of(f2, id));
    }
    SUBCASE("d=0 degenerate rows") {
        FqMatrix e00(f2, 1, 0), e01(f2, 0, 1);
        CHECK(pair_to_relation({0, 0}, e00, e00, 1, 1).space == Subspace::zero(f2, 2));
        CHECK(pair_to_relation({1, 1}, e01, e01, 1, 1).space == Subspace::full(f2, 2));
    }
    SUBCASE("type (1,0), a=id, b=id gives the graph of the identity") {
        FqMatrix id = FqMatrix::identity(f2, 1);
        CHECK(pair_to_relation({1, 0}, id, id, 1, 1) == graph_of(f2, id));
    }
    SUBCASE("shape or rank violations are rejected") {
        FqMatrix z(f2, 1, 1);  // rank 0, claims d=1
        CHECK_THROWS_AS(pair_to_relation({0, 0}, z, z, 1, 1), DomainError);
    }
}

TEST_CASE("relation_to_pair examples") {
    const FieldSpec& f3 = FieldSpec::get(3);
    SUBCASE("diagonal at type (1,1)") {
        FqMatrix id = FqMatrix::identity(f3, 1);
        RelationFactorization fc = relation_to_pair(graph_of(f3, id), {1, 1});
        CHECK(fc.d == 1);
        CHECK(pair_to_relation({1, 1}, fc.a, fc.b, 1, 1) == graph_of(f3, id));
    }
    SUBCASE("zero relation at type (0,0)") {
        LinearRelation zero(1, 1, Subspace::zero(f3, 2));
        RelationFactorization fc = relation_to_pair(zero, {0, 0});
        CHECK(fc.d == 0);
        CHECK(fc.a.cols() == 0);
        CHECK(fc.b.cols() == 0);
    }
    SUBCASE("graph of a unit scalar at type (0,0) round trips") {
        FqMatrix lam(f3, 1, 1);
        lam(0, 0) = 2;
        LinearRelation g = graph_of(f3, lam);
        RelationFactorization fc = relation_to_pair(g, {0, 0});
        CHECK(fc.d == 1);
        CHECK(pair_to_relation({0, 0}, fc.a, fc.b, 1, 1) == g);
    }
    SUBCASE("type mismatch is rejected") {
        const FieldSpec& f2 = FieldSpec::get(2);
        LinearRelation full(1, 1, Subspace::full(f2, 2));
        CHECK_THROWS_AS(relation_to_pair(full, {0, 0}), DomainError);
    }
}

TEST_CASE("round trip identity over all type-valid relations") {
    const FieldSpec& f2 = FieldSpec::get(2);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            enumerate_subspaces(f2, m + n, std::nullopt, [&](const Subspace& s) {
                LinearRelation r(m, n, s);
                for (int rb : {0, 1})
                    for (int sb : {0, 1}) {
                        RelationType ty{rb, sb};
                        if (!check_type(r, ty)) continue;
                        RelationFactorization fc = relation_to_pair(r, ty);
                        CHECK(fc.d == relation_invariants(r).rank);
                        CHECK(pair_to_relation(ty, fc.a, fc.b, m, n) == r);
                    }
                return true;
            });
}

TEST_CASE("GL(U) orbit invariance for d=1") {
    // transforming (a,b) by a unit u leaves the relation unchanged
    const FieldSpec& f5 = FieldSpec::get(5);
    FqMatrix a(f5, 2, 1), b(f5, 2, 1);
    a(0, 0) = 1;
    a(1, 0) = 3;
    b(0, 0) = 2;
    b(1, 0) = 1;
    LinearRelation base = pair_to_relation({0, 0}, a, b, 2, 2);
    for (int u = 1; u < 5; ++u) {
        FqMatrix au = a.scaled(static_cast<Fq>(u));
        FqMatrix bu = b.scaled(static_cast<Fq>(u));
        CHECK(pair_to_relation({0, 0}, au, bu, 2, 2) == base);
    }
}
