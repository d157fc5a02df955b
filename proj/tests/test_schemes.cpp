#include "doctest.h"

#include "secrecy_ldic/schemes.hpp"

using namespace secrecy_ldic;

namespace {

Rational rate(int m, int n, int C) { return achievable_rate(LdicParams(m, n, C)); }

}  // namespace

TEST_CASE("weak regime rates") {
    CHECK(rate(4, 2, 0) == 2);
    CHECK(rate(4, 2, 2) == 4);
    CHECK(rate(4, 0, 0) == 4);
    CHECK(rate(4, 2, 1) == 3);
    const auto plan = plan_weak(LdicParams(4, 0, 0));
    for (int level = 1; level <= 4; ++level) CHECK(plan.slots[0].at(1, level).size() == 1);
}

TEST_CASE("moderate regime rates and block parameters") {
    CHECK(rate(5, 4, 1) == 3);
    CHECK(rate(5, 4, 0) == 2);
    CHECK(rate(5, 4, 4) == 5);
    const auto b = moderate_params(LdicParams(5, 4, 0));
    CHECK(b.r2 == 1);
    CHECK(b.g == 3);
    CHECK(b.B == 1);
    CHECK(b.t == 0);
    CHECK(b.q_extra == 0);
}

TEST_CASE("high interference rates") {
    CHECK(rate(5, 7, 0) == 2);
    CHECK(rate(5, 7, 7) == 7);
    CHECK(rate(4, 6, 0) == 2);
    const auto b = high_low_params(LdicParams(5, 7, 0));
    CHECK(b.r2 == 2);
    CHECK(b.g == 5);
    CHECK(b.B == 0);
    CHECK(b.t == 5);
    CHECK(b.q_extra == 2);
    CHECK(rate(5, 8, 2) == 4);
    CHECK(rate(5, 8, 4) == 5);
    CHECK(rate(5, 8, 0) == 2);
}

TEST_CASE("very high interference rates") {
    CHECK(rate(2, 4, 1) == 2);
    CHECK(rate(2, 4, 2) == Rational(5, 2));
    CHECK(rate(3, 6, 2) == 3);
    CHECK(rate(3, 6, 0) == 0);
    CHECK(rate(5, 5, 10) == 0);
    CHECK(rate(0, 4, 3) == 3);
    CHECK(plan_very_high(LdicParams(2, 4, 2)).slots.size() == 2);
}

TEST_CASE("data-sharing alternative achieves C at alpha = 2") {
    const auto plan = plan_very_high_data_sharing(LdicParams(2, 4, 1));
    CHECK(plan.data_count(1) == 1);
    CHECK(plan.data_count(2) == 1);
    CHECK(plan.max_coop_usage() <= 1);
}

TEST_CASE("planners reject parameters outside their regime") {
    CHECK_THROWS_AS(plan_weak(LdicParams(5, 4, 0)), DomainError);
    CHECK_THROWS_AS(plan_moderate(LdicParams(4, 2, 0)), DomainError);
    CHECK_THROWS_AS(plan_high_low(LdicParams(5, 8, 0)), DomainError);
    CHECK_THROWS_AS(plan_high_high(LdicParams(5, 7, 0)), DomainError);
    CHECK_THROWS_AS(plan_very_high(LdicParams(5, 8, 0)), DomainError);
}

TEST_CASE("plans respect the cooperative budget and count the formula's data bits") {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 16; ++n) {
            if (m == 0 && n == 0) continue;
            for (int C = 0; C <= n; ++C) {
                const LdicParams p(m, n, C);
                const auto plan = build_plan(p);
                INFO("(m,n,C) = (" << m << "," << n << "," << C << ")");
                CHECK(plan.max_coop_usage() <= C);
                CHECK(plan.data_count(1) == plan.data_count(2));
                CHECK(Rational(plan.data_count(1), static_cast<std::int64_t>(plan.slots.size())) == achievable_rate(p));
            }
        }
}

TEST_CASE("rate is nondecreasing in C") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n <= 16; ++n)
            for (int C = 1; C <= n; ++C) {
                INFO("(m,n,C) = (" << m << "," << n << "," << C << ")");
                CHECK(rate(m, n, C) >= rate(m, n, C - 1));
            }
}

TEST_CASE("weak regime with C = n reaches max(m, n)") {
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; 3 * n <= 2 * m; ++n) CHECK(rate(m, n, n) == m);
}

TEST_CASE("very high, even m, C <= m/2 gives exactly 2C") {
    for (int m = 2; m <= 8; m += 2)
        for (int n = 2 * m; n <= 16; ++n)
            for (int C = 1; 2 * C <= m; ++C) CHECK(rate(m, n, C) == 2 * C);
}

TEST_CASE("realize places XORs of assigned symbols") {
    const auto plan = plan_weak(LdicParams(4, 2, 2));
    Assignment zero(1);
    for (const auto& s : plan.slots[0].symbols()) zero[0][s] = 0;
    for (const auto& [x1, x2] : realize(plan, zero)) {
        CHECK(x1.packed() == 0);
        CHECK(x2.packed() == 0);
    }
    // a_i at level i for i = 1..4; b3 on level 1 and b4 on level 2 of transmitter 1.
    Assignment v(1);
    const int a[5] = {0, 1, 1, 0, 1};  // a1..a4 (top -> bottom reads a4 a3 a2 a1 = 1 0 1 1)
    for (int i = 1; i <= 4; ++i) v[0][SymBit::data(1, i)] = a[i];
    for (int i = 1; i <= 4; ++i) v[0][SymBit::data(2, i)] = 0;
    v[0][SymBit::data(2, 3)] = 1;
    const auto x = realize(plan, v)[0].first;
    CHECK(x.at(1) == (a[1] ^ 1));
    CHECK(x.at(2) == a[2]);
    CHECK(x.at(3) == a[3]);
    CHECK(x.at(4) == a[4]);

    // Flipping one data symbol flips exactly the levels that carry it.
    Assignment w = v;
    w[0][SymBit::data(2, 3)] = 0;
    const auto y = realize(plan, w)[0];
    CHECK((x ^ y.first) == BitWord::from_top_down({0, 0, 0, 1}));

    Assignment missing(1);
    CHECK_THROWS_AS(realize(plan, missing), DomainError);
}
