#include "doctest.h"

#include "secrecy_ldic/bounds.hpp"
#include "secrecy_ldic/schemes.hpp"

using namespace secrecy_ldic;

TEST_CASE("bound on 2R1 + R2") {
    CHECK(outer_thm1(LdicParams(5, 4, 1)) == 3);
    CHECK(outer_thm1(LdicParams(3, 6, 0)) == 2);
    CHECK(outer_thm1(LdicParams(4, 2, 0)) == Rational(8, 3));
}

TEST_CASE("very high interference bound 2C") {
    CHECK(*outer_thm2(LdicParams(3, 6, 0)) == 0);
    CHECK(*outer_thm2(LdicParams(3, 6, 1)) == 2);
    CHECK(*outer_thm2(LdicParams(2, 4, 3)) == 6);
    CHECK_FALSE(outer_thm2(LdicParams(5, 8, 0)).has_value());
}

TEST_CASE("high interference bound 2C + 2m - n") {
    CHECK(*outer_thm3(LdicParams(5, 8, 0)) == 2);
    CHECK(*outer_thm3(LdicParams(5, 8, 2)) == 6);
    CHECK(*outer_thm3(LdicParams(3, 4, 0)) == 2);
    CHECK_FALSE(outer_thm3(LdicParams(3, 6, 0)).has_value());
}

TEST_CASE("alpha = 1 bound is zero irrespective of C") {
    CHECK(*outer_thm4(LdicParams(3, 3, 0)) == 0);
    CHECK(*outer_thm4(LdicParams(5, 5, 5)) == 0);
    CHECK(*outer_thm4(LdicParams(1, 1, 0)) == 0);
    CHECK_FALSE(outer_thm4(LdicParams(4, 3, 0)).has_value());
}

TEST_CASE("closed-form minimum") {
    CHECK(outer_consolidated(LdicParams(5, 4, 1)).value == 3);
    CHECK(outer_consolidated(LdicParams(3, 6, 0)).value == 0);
    CHECK(outer_consolidated(LdicParams(4, 4, 2)).value == 0);
    CHECK_THROWS_AS(outer_consolidated(LdicParams(0, 3, 1)), DomainError);
}

TEST_CASE("minimum of the applicable bounds") {
    for (int C = 0; C <= 5; ++C) {
        const auto b = outer_min(LdicParams(5, 4, C));
        CHECK(b.minimum == b.thm1);
    }
    CHECK(outer_min(LdicParams(3, 6, 1)).minimum == 2);
    CHECK(outer_min(LdicParams(5, 8, 0)).minimum == 2);
}

TEST_CASE("closed form agrees with the minimum wherever its branches apply") {
    int uncovered = 0;
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= 16; ++n)
            for (int C = 0; C <= n; ++C) {
                const auto b = outer_min(LdicParams(m, n, C));
                INFO("(m,n,C) = (" << m << "," << n << "," << C << ")");
                REQUIRE(b.consolidated.has_value());
                CHECK(b.consolidated->value == b.minimum);
                if (!b.consolidated->covered) ++uncovered;
            }
    CHECK(uncovered > 0);  // the boundary points exist and are flagged
}

TEST_CASE("inner never exceeds outer and bounds are nonnegative") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 16; ++n)
            for (int C = 0; C <= n; ++C) {
                const LdicParams p(m, n, C);
                const auto b = outer_min(p);
                INFO("(m,n,C) = (" << m << "," << n << "," << C << ")");
                CHECK(b.minimum >= 0);
                CHECK(achievable_rate(p) <= b.minimum);
            }
}
