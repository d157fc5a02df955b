#include "doctest.h"

#include "secrecy_ldic/gsic.hpp"

using namespace secrecy_ldic;

TEST_CASE("deterministic equivalent of a Gaussian channel") {
    const auto p = deterministic_equivalent(GsicParams{100.0, 1.0, 0.5, 0.0});
    CHECK(p.m == 3);
    CHECK(p.n == 2);
    CHECK(deterministic_equivalent(GsicParams{1.0, 1.0, 0.0, 0.0}).m == 0);
    CHECK(deterministic_equivalent(GsicParams{100.0, 1.0, 0.5, 1.9}).C_requested == 1);
}

TEST_CASE("private-and-dummy scheme rates") {
    const GsicParams g{100.0, 1.0, 0.5, 10.0};
    const auto zero = private_and_dummy_slot_rates(g, PowerSplit{0.3, 0.4, 0.0, 0.0});
    CHECK(zero.R1 == 0.0);
    CHECK(zero.R2 == 0.0);

    const auto d = derive_powers(g, PowerSplit{1.0, 0.5, 1.0, 1.0}, GsicScheme::private_and_dummy);
    CHECK(d.sigma_u2 == doctest::Approx(45.0));
    CHECK(d.P_p1 == 0.0);
    CHECK(d.P_p2 == 0.0);
    CHECK(d.P_d2 == 0.0);
    const auto r = private_and_dummy_slot_rates(g, PowerSplit{1.0, 0.5, 1.0, 1.0});
    CHECK(r.R1 == doctest::Approx(0.5 * std::log2(46.0)).epsilon(1e-12));
    CHECK(r.R1 == doctest::Approx(2.762).epsilon(1e-3));

    const GsicParams no_coop{100.0, 1.0, 0.5, 0.0};
    CHECK(private_and_dummy_slot_rates(no_coop, PowerSplit{1.0, 0.5, 1.0, 1.0}).R1 == 0.0);
    CHECK_THROWS_AS(private_and_dummy_slot_rates(g, PowerSplit{1.5, 0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("power constraint of the cooperative transmitter is met") {
    const GsicParams g{100.0, 1.0, 0.7, 1.0};
    for (double t1 : {0.0, 0.3, 1.0})
        for (double b1 : {0.2, 1.0}) {
            const auto d = derive_powers(g, PowerSplit{t1, 0.5, b1, 1.0}, GsicScheme::private_and_dummy);
            CHECK((1.0 + 0.49) * d.sigma_z2 + d.P_p1 <= d.P1 + 1e-9);
            CHECK(d.sigma_u2 >= 0.0);
        }
}

TEST_CASE("dummy-only scheme rates") {
    CHECK(dummy_only_slot_rates(GsicParams{100.0, 1.0, 2.0, 0.0}, PowerSplit{0.5, 0.0, 1.0, 1.0}).R2 == 0.0);
    const GsicParams g{100.0, 1.0, 2.0, 10.0};
    const auto d = derive_powers(g, PowerSplit{1.0, 0.0, 1.0, 1.0}, GsicScheme::dummy_only);
    CHECK(d.sigma_z2 == doctest::Approx(20.0));
    CHECK(d.sigma_u2 == doctest::Approx(180.0));
    CHECK(d.P_d2 == 0.0);
    const auto r = dummy_only_slot_rates(g, PowerSplit{1.0, 0.0, 1.0, 1.0});
    CHECK(r.R2 == doctest::Approx(0.5 * std::log2(181.0)).epsilon(1e-12));
    CHECK(r.R2 == doctest::Approx(3.75).epsilon(1e-3));
}

TEST_CASE("optimized symmetric rate: alpha = 1 and no cross link") {
    CHECK(optimize_symmetric_rate(GsicParams{100.0, 1.0, 1.0, 0.0}).R_s <= 0.05);
    const double free = optimize_symmetric_rate(GsicParams{100.0, 1.0, 0.0, 0.0}).R_s;
    CHECK(std::abs(free - 0.5 * std::log2(101.0)) <= 0.01);
}

TEST_CASE("outer bound spot values") {
    const auto t5 = outer_thm5(GsicParams{100.0, 1.0, 0.0, 0.0});
    CHECK(t5.value == doctest::Approx(0.5 * std::log2(101.0)).epsilon(1e-6));
    CHECK(t5.value == doctest::Approx(3.329).epsilon(1e-3));
    CHECK(std::abs(t5.rho) < 1e-3);

    const auto t6 = outer_thm6(GsicParams{100.0, 1.0, 1.0, 0.0});
    CHECK(t6.value == doctest::Approx(0.5 * std::log2(101.0)).epsilon(1e-6));
    CHECK(t6.rho < -0.999);

    const auto t7 = outer_thm7(GsicParams{100.0, 1.0, 1.0, 0.0});
    CHECK(t7.value == doctest::Approx(0.5 * std::log2(801.0 / 401.0)).epsilon(1e-6));
    CHECK(t7.rho > 0.999);
}

TEST_CASE("closed-form conditional determinant matches the matrix computation") {
    for (double S : {1.0, 10.0, 100.0, 1000.0})
        for (double I : {0.0, 0.5, 10.0, 100.0, 3000.0})
            for (double rho : {-0.95, -0.5, 0.0, 0.3, 0.9}) {
                const auto k = covariance_blocks<double>(S, I, rho);
                const double direct = k.conditional().determinant();
                const double closed = conditional_determinant(S, I, rho);
                CHECK(closed == doctest::Approx(direct).epsilon(1e-7));
                CHECK(closed >= 0.0);
                // The conditional covariance stays symmetric.
                CHECK(k.conditional()(0, 1) == doctest::Approx(k.conditional()(1, 0)));
                // Long double evaluation agrees with double.
                CHECK(static_cast<double>(conditional_determinant<long double>(S, I, rho)) ==
                      doctest::Approx(closed).epsilon(1e-12));
            }
}

TEST_CASE("bounds are affine in C_G with slopes 2/3 and 2; the last one ignores C_G") {
    for (double a : {0.3, 0.8, 1.3, 2.5}) {
        const auto g0 = gsic_at_alpha(100.0, a, 0.0), g1 = gsic_at_alpha(100.0, a, 1.5);
        CHECK(outer_thm5(g1).value - outer_thm5(g0).value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(outer_thm6(g1).value - outer_thm6(g0).value == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(outer_thm7(g1).value == outer_thm7(g0).value);
    }
}

TEST_CASE("inner <= outer and monotone in C_G on an alpha x C_G grid") {
    OptimizerOptions opt;
    opt.grid_points = 11;
    for (double a : {0.2, 0.6, 0.9, 1.0, 1.3, 1.5, 1.8, 2.0, 2.5, 3.0}) {
        double previous = -1.0;
        for (double cg : {0.0, 0.5, 1.0, 2.0, 10.0}) {
            const auto g = gsic_at_alpha(100.0, a, cg);
            const double inner = optimize_symmetric_rate(g, opt).R_s;
            INFO("alpha " << a << " C_G " << cg);
            CHECK(inner >= 0.0);
            CHECK(inner <= gsic_outer_min(g).minimum + 1e-6);
            CHECK(inner >= previous - 1e-9);
            previous = inner;
        }
    }
}

TEST_CASE("large-power correspondence with the deterministic bounds") {
    CHECK(high_snr_agreement_check(0.5, 1e12).thm5_gap <= 0.4);
    CHECK(high_snr_agreement_check(1.5, 1e12).thm6_gap <= 0.4);
    CHECK(high_snr_agreement_check(2.5, 1e12).thm6 <= 0.4);
}
