#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quiverkac/polynomial.hpp"

using namespace qk;

TEST_CASE("canonical form and eval") {
    CHECK(IntPolynomial({1, 1, 0}).degree() == 1);
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial({0, 0}).is_zero());
    CHECK(IntPolynomial({1, 1}).eval(2) == 3);
    CHECK(IntPolynomial().eval(17) == 0);
    CHECK(IntPolynomial({1, 0, 1}).eval(3) == 10);
}

TEST_CASE("pretty printing") {
    CHECK(IntPolynomial({1, 3, 1}).pretty() == "q^2+3q+1");
    CHECK(IntPolynomial({-1, 1}).pretty() == "q-1");
    CHECK(IntPolynomial({0, 1}).pretty() == "q");
    CHECK(IntPolynomial().pretty() == "0");
    CHECK(IntPolynomial({5}).pretty() == "5");
}

TEST_CASE("interpolation") {
    SUBCASE("line through two points") {
        CHECK(interpolate({{2, 3}, {3, 4}}, 1) == IntPolynomial({1, 1}));
    }
    SUBCASE("constant") { CHECK(interpolate({{2, 1}}, 0) == IntPolynomial({1})); }
    SUBCASE("non-integral slope is an error") {
        CHECK_THROWS_AS(interpolate({{2, 1}, {4, 2}}, 1), NonIntegerCoefficients);
    }
    SUBCASE("surplus points are checked, not fitted") {
        CHECK_NOTHROW(interpolate({{2, 3}, {3, 4}, {5, 6}}, 1));
        CHECK_THROWS_AS(interpolate({{2, 3}, {3, 4}, {5, 7}}, 1), SurplusMismatch);
    }
    SUBCASE("quadratic reproduced exactly") {
        IntPolynomial p({1, -2, 3});
        std::vector<std::pair<long long, long long>> pts;
        for (long long x : {2, 3, 5, 7}) pts.emplace_back(x, p.eval(x));
        CHECK(interpolate(pts, 2) == p);
    }
    SUBCASE("too few points") {
        CHECK_THROWS_AS(interpolate({{2, 3}}, 1), DomainError);
        CHECK_THROWS_AS(interpolate({{2, 3}, {2, 3}}, 1), DomainError);
    }
}

TEST_CASE("ring operations") {
    IntPolynomial a({1, 1}), b({0, 1});
    CHECK((a - b) == IntPolynomial({1}));
    CHECK((a + b) == IntPolynomial({1, 2}));
    CHECK((a - a).is_zero());
}
