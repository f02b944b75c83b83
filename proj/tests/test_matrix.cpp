#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "quiverkac/matrix.hpp"

using namespace qk;

namespace {

FqMatrix from_rows(const FieldSpec& f, std::vector<std::vector<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    FqMatrix m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = static_cast<Fq>(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    const FieldSpec& f2 = FieldSpec::get(2);
    SUBCASE("identity is fixed") {
        FqMatrix id = FqMatrix::identity(f2, 3);
        RrefResult r = rref(id);
        CHECK(r.mat == id);
        CHECK(r.rank == 3);
    }
    SUBCASE("zero matrix is fixed") {
        FqMatrix z(f2, 2, 3);
        RrefResult r = rref(z);
        CHECK(r.mat == z);
        CHECK(r.rank == 0);
    }
    SUBCASE("all-ones over F_2") {
        RrefResult r = rref(from_rows(f2, {{1, 1}, {1, 1}}));
        CHECK(r.mat == from_rows(f2, {{1, 1}, {0, 0}}));
        CHECK(r.rank == 1);
    }
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        enumerate_matrices(f, 2, 3, std::nullopt, [&](const FqMatrix& m) {
            RrefResult r = rref(m);
            CHECK(rref(r.mat).mat == r.mat);
            CHECK(r.rank == rank(m.transposed()));
            return true;
        });
    }
}

TEST_CASE("nullspace examples") {
    const FieldSpec& f2 = FieldSpec::get(2);
    SUBCASE("[1 1] over F_2") {
        Subspace s = nullspace(from_rows(f2, {{1, 1}}));
        CHECK(s.dim() == 1);
        CHECK(s.contains({1, 1}));
    }
    SUBCASE("identity has zero nullspace") {
        CHECK(nullspace(FqMatrix::identity(f2, 3)).dim() == 0);
    }
    SUBCASE("zero 1x2 map has full nullspace") {
        Subspace s = nullspace(FqMatrix(f2, 1, 2));
        CHECK(s == Subspace::full(f2, 2));
    }
}

TEST_CASE("rank-nullity over all small matrices") {
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        for (int rows = 0; rows <= 3; ++rows)
            for (int cols = 0; cols <= 3; ++cols)
                enumerate_matrices(f, rows, cols, std::nullopt, [&](const FqMatrix& m) {
                    CHECK(nullspace(m).dim() + rank(m) == cols);
                    return true;
                });
    }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
    SUBCASE("n=2 q=2") {
        const FieldSpec& f2 = FieldSpec::get(2);
        int all = 0, lines = 0;
        enumerate_subspaces(f2, 2, std::nullopt, [&](const Subspace&) {
            ++all;
            return true;
        });
        enumerate_subspaces(f2, 2, 1, [&](const Subspace&) {
            ++lines;
            return true;
        });
        CHECK(all == 5);
        CHECK(lines == 3);
    }
    SUBCASE("each subspace appears exactly once, count = Gaussian binomial") {
        for (int q : {2, 3}) {
            const FieldSpec& f = FieldSpec::get(q);
            for (int n = 0; n <= 4; ++n)
                for (int d = 0; d <= n; ++d) {
                    std::set<Subspace> seen;
                    enumerate_subspaces(f, n, d, [&](const Subspace& s) {
                        CHECK(s.dim() == d);
                        CHECK(seen.insert(s).second);
                        return true;
                    });
                    CHECK(static_cast<long long>(seen.size()) == gaussian_binomial(n, d, q));
                }
        }
    }
    SUBCASE("d=0 yields only the zero subspace") {
        const FieldSpec& f3 = FieldSpec::get(3);
        int count = 0;
        enumerate_subspaces(f3, 3, 0, [&](const Subspace& s) {
            CHECK(s == Subspace::zero(f3, 3));
            ++count;
            return true;
        });
        CHECK(count == 1);
    }
}

TEST_CASE("matrix enumeration") {
    SUBCASE("1x1 over F_3, no filter") {
        int n = 0;
        enumerate_matrices(FieldSpec::get(3), 1, 1, std::nullopt, [&](const FqMatrix&) {
            ++n;
            return true;
        });
        CHECK(n == 3);
    }
    SUBCASE("1x1 over F_2, maximal rank") {
        std::vector<FqMatrix> out;
        enumerate_matrices(FieldSpec::get(2), 1, 1, 1, [&](const FqMatrix& m) {
            out.push_back(m);
            return true;
        });
        REQUIRE(out.size() == 1);
        CHECK(out[0](0, 0) == 1);
    }
    SUBCASE("0xN has exactly one empty matrix of maximal rank") {
        int n = 0;
        enumerate_matrices(FieldSpec::get(5), 0, 3, 0, [&](const FqMatrix& m) {
            CHECK(m.rows() == 0);
            ++n;
            return true;
        });
        CHECK(n == 1);
    }
}

TEST_CASE("inverse round trip over F_4") {
    const FieldSpec& f4 = FieldSpec::get(4);
    enumerate_matrices(f4, 2, 2, 2, [&](const FqMatrix& m) {
        CHECK(m * m.inverse() == FqMatrix::identity(f4, 2));
        return true;
    });
}
