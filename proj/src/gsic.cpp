#include "secrecy_ldic/gsic.hpp"

#include "secrecy_ldic/parallel.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

namespace secrecy_ldic {

namespace {

double half_log2(double x) { return 0.5 * std::log2(x); }
double pos(double x) { return x > 0.0 ? x : 0.0; }

int floor_levels(double power) {
    if (!(power > 1.0)) return 0;
    return static_cast<int>(std::floor(0.5 * std::log2(power)));
}

}  // namespace

std::optional<double> GsicParams::alpha() const {
    if (snr() <= 1.0 || inr() <= 1.0) return std::nullopt;
    return std::log(inr()) / std::log(snr());
}

void GsicParams::validate() const {
    if (!(P >= 0.0) || !(C_G >= 0.0) || !std::isfinite(h_d) || !std::isfinite(h_c) || !std::isfinite(P))
        throw DomainError("Gaussian parameters need P >= 0, C_G >= 0 and finite gains");
}

GsicParams gsic_at_alpha(double P, double alpha, double C_G) {
    GsicParams g;
    g.P = P;
    g.h_d = 1.0;
    g.h_c = std::sqrt(std::pow(P, alpha) / P);
    g.C_G = C_G;
    return g;
}

LdicParams deterministic_equivalent(const GsicParams& g) {
    g.validate();
    return LdicParams(floor_levels(g.snr()), floor_levels(g.inr()), static_cast<int>(std::floor(g.C_G)));
}

DerivedPowers derive_powers(const GsicParams& g, const PowerSplit& s, GsicScheme scheme) {
    g.validate();
    for (double v : {s.t1, s.u1, s.b1, s.b2})
        if (!(v >= 0.0 && v <= 1.0)) throw DomainError("power-split variables must lie in [0, 1]");
    const double hd2 = g.h_d * g.h_d, hc2 = g.h_c * g.h_c;
    DerivedPowers d;
    d.P1 = s.b1 * g.P;
    d.P2 = s.b2 * g.P;
    d.sigma_z2 = hd2 + hc2 > 0.0 ? s.t1 * d.P1 / (hd2 + hc2) : 0.0;
    d.sigma_u2 = (hd2 - hc2) * (hd2 - hc2) * d.sigma_z2;
    d.P_p1 = (1.0 - s.t1) * d.P1;
    // Transmitter 2 also sends the cooperative signal; what is left is clamped at 0.
    d.P_rest = pos(d.P2 - (hd2 + hc2) * d.sigma_z2);
    if (scheme == GsicScheme::private_and_dummy) {
        d.P_p2 = s.u1 * d.P_rest;
        d.P_d2 = (1.0 - s.u1) * d.P_rest;
    } else {
        d.P_p2 = 0.0;
        d.P_d2 = d.P_rest;
    }
    return d;
}

SlotRates private_and_dummy_slot_rates(const GsicParams& g, const PowerSplit& s) {
    const auto d = derive_powers(g, s, GsicScheme::private_and_dummy);
    const double hd2 = g.h_d * g.h_d, hc2 = g.h_c * g.h_c;
    // Rate penalties paid to keep the private parts confidential.
    const double Rp1 = half_log2(1.0 + hc2 * d.P_p1 / (1.0 + hd2 * d.P_d2));
    const double Rp2 = half_log2(1.0 + hc2 * d.P_p2 / (1.0 + hc2 * d.P_d2));

    const double N1 = 1.0 + hc2 * d.P_d2 + hc2 * d.P_p2;
    const double r1 = std::min(half_log2(1.0 + (d.sigma_u2 + hd2 * d.P_p1) / N1),
                               half_log2(1.0 + hd2 * d.P_p1 / N1) + std::min(g.C_G, half_log2(1.0 + d.sigma_u2 / N1))) -
                      Rp1;
    const double N2 = 1.0 + hd2 * d.P_d2 + hc2 * d.P_p1;
    const double r2 = std::min(half_log2(1.0 + (d.sigma_u2 + hd2 * d.P_p2) / N2),
                               half_log2(1.0 + hd2 * d.P_p2 / N2) + std::min(g.C_G, half_log2(1.0 + d.sigma_u2 / N2))) -
                      Rp2;
    return {pos(r1), pos(r2)};
}

SlotRates dummy_only_slot_rates(const GsicParams& g, const PowerSplit& s) {
    const auto d = derive_powers(g, s, GsicScheme::dummy_only);
    const double hd2 = g.h_d * g.h_d, hc2 = g.h_c * g.h_c;
    const double su = d.sigma_u2;
    const double Rp1 = half_log2(1.0 + hc2 * d.P_p1 / (1.0 + hd2 * d.P_d2));
    const double Rd2 = half_log2(1.0 + hd2 * d.P_d2);
    const double coop = std::min(half_log2(1.0 + su), g.C_G);

    const double e1 = std::min(half_log2(1.0 + su + hd2 * d.P_p1), half_log2(1.0 + hd2 * d.P_p1) + coop) - Rp1;
    const double e2 = std::min({half_log2(1.0 + su + hd2 * d.P_p1 + hc2 * d.P_d2),
                                half_log2(1.0 + su + hc2 * d.P_d2) + coop,
                                half_log2(1.0 + hd2 * d.P_p1) + half_log2(1.0 + su + hc2 * d.P_d2)}) -
                      (Rp1 + Rd2);
    const double e3 = half_log2(1.0 + hd2 * d.P_p1 + hc2 * d.P_d2) + half_log2(1.0 + su + hc2 * d.P_d2) -
                      (Rp1 + 2.0 * Rd2);
    const double r1 = std::min({e1, e2, e3});
    const double r2 = std::min(half_log2(1.0 + su / (1.0 + hd2 * d.P_d2 + hc2 * d.P_p1)), g.C_G);
    return {pos(r1), pos(r2)};
}

namespace {

using Point = std::array<double, 4>;  // t1, u1, b1, b2

PowerSplit to_split(const Point& x) { return {x[0], x[1], x[2], x[3]}; }

}  // namespace

SymmetricRate optimize_symmetric_rate(const GsicParams& g, const OptimizerOptions& opt) {
    g.validate();
    const GsicScheme scheme = g.inr() <= g.snr() ? GsicScheme::private_and_dummy : GsicScheme::dummy_only;
    auto rates = [&](const Point& x) {
        return scheme == GsicScheme::private_and_dummy ? private_and_dummy_slot_rates(g, to_split(x))
                                                       : dummy_only_slot_rates(g, to_split(x));
    };
    // User 1 gets R1 in slot 1 and, with roles exchanged, R2 in slot 2.
    auto objective = [&](const Point& x) {
        const auto r = rates(x);
        return 0.5 * (r.R1 + r.R2);
    };

    const int N = std::max(2, opt.grid_points);
    auto coord = [N](int i) { return static_cast<double>(i) / (N - 1); };
    // u1 only matters for the private-and-dummy scheme.
    const int Nu = scheme == GsicScheme::private_and_dummy ? N : 1;

    struct Best {
        double value = -1.0;
        Point x{};
    };
    std::vector<Best> per_t1(static_cast<std::size_t>(N));
    const int workers = opt.workers > 0 ? opt.workers : default_worker_count();
    parallel_for(static_cast<std::size_t>(N), workers, [&](std::size_t i) {
        Best best;
        for (int j = 0; j < Nu; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    const Point x{coord(static_cast<int>(i)), Nu == 1 ? 0.0 : coord(j), coord(k), coord(l)};
                    const double v = objective(x);
                    if (v > best.value) best = {v, x};  // first (lowest index) wins ties
                }
        per_t1[i] = best;
    });
    Best best;
    for (const auto& b : per_t1)
        if (b.value > best.value) best = b;

    // Coordinate refinement with a shrinking step; strict improvement only.
    const int dims = Nu == 1 ? 3 : 4;
    const std::array<int, 4> order = Nu == 1 ? std::array<int, 4>{0, 2, 3, 1} : std::array<int, 4>{0, 1, 2, 3};
    for (double h = 0.5 / (N - 1); h >= opt.min_step;) {
        bool improved = false;
        for (int c = 0; c < dims; ++c) {
            for (double dir : {1.0, -1.0}) {
                Point y = best.x;
                y[order[c]] = std::clamp(y[order[c]] + dir * h, 0.0, 1.0);
                const double v = objective(y);
                if (v > best.value) {
                    best = {v, y};
                    improved = true;
                }
            }
        }
        if (!improved) h *= 0.5;
    }

    SymmetricRate out;
    out.scheme = scheme;
    out.slot1 = to_split(best.x);
    out.rates = rates(best.x);
    out.R_s = 0.5 * (out.rates.R1 + out.rates.R2);
    return out;
}

RhoMaximum maximize_over_rho(const std::function<double(double)>& f, double grid_step) {
    const int steps = static_cast<int>(std::lround(2.0 / grid_step));
    RhoMaximum best{-std::numeric_limits<double>::infinity(), -1.0};
    for (int i = 0; i <= steps; ++i) {
        const double rho = -1.0 + 2.0 * i / steps;
        const double v = f(rho);
        if (v > best.value) best = {v, rho};
    }
    // Golden-section search on the bracket around the best grid point.
    double lo = std::max(-1.0, best.rho - grid_step), hi = std::min(1.0, best.rho + grid_step);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    if (f1 > best.value) best = {f1, x1};
    if (f2 > best.value) best = {f2, x2};
    return best;
}

namespace {

void require_psd(double snr, double inr, double rho) {
    if (!(conditional_determinant(snr, inr, rho) >= 0.0))
        throw DomainError("conditional covariance lost semidefiniteness");
}

}  // namespace

RhoMaximum outer_thm5(const GsicParams& g) {
    g.validate();
    const double S = g.snr(), I = g.inr(), C = g.C_G;
    return maximize_over_rho([&](double rho) {
        require_psd(S, I, rho);
        return thm5_objective(S, I, C, rho);
    });
}

RhoMaximum outer_thm6(const GsicParams& g) {
    g.validate();
    const double S = g.snr(), I = g.inr(), C = g.C_G;
    return maximize_over_rho([&](double rho) { return thm6_objective(S, I, C, rho); });
}

RhoMaximum outer_thm7(const GsicParams& g) {
    g.validate();
    const double S = g.snr(), I = g.inr();
    return maximize_over_rho([&](double rho) { return thm7_objective(S, I, rho); });
}

GsicBoundSet gsic_outer_min(const GsicParams& g) {
    GsicBoundSet b;
    b.thm5 = pos(outer_thm5(g).value);
    b.thm6 = pos(outer_thm6(g).value);
    b.thm7 = pos(outer_thm7(g).value);
    b.minimum = std::min({b.thm5, b.thm6, b.thm7});
    return b;
}

HighSnrAgreement high_snr_agreement_check(double alpha, double P) {
    const GsicParams g = gsic_at_alpha(P, alpha, 0.0);
    HighSnrAgreement r;
    r.alpha = alpha;
    r.P = P;
    r.m = 0.5 * std::log2(g.snr());
    r.n = 0.5 * std::log2(g.inr());
    r.floored = deterministic_equivalent(g);
    r.thm5 = outer_thm5(g).value;
    r.thm6 = outer_thm6(g).value;

    auto refs = [alpha](double m, double n) {
        const double ref5 = alpha <= 1.0 ? (3.0 * m - 2.0 * n) / 3.0 : n / 3.0;
        const double ref6 = alpha <= 1.0 ? m : (alpha < 2.0 ? 2.0 * m - n : 0.0);
        return std::pair{ref5, ref6};
    };
    const auto [ref5, ref6] = refs(r.m, r.n);
    r.thm5_reference = ref5;
    r.thm6_reference = ref6;
    r.thm5_gap = std::abs(r.thm5 - ref5);
    r.thm6_gap = std::abs(r.thm6 - ref6);
    const auto [f5, f6] = refs(r.floored.m, r.floored.n);
    r.thm5_gap_floored = std::abs(r.thm5 - f5);
    r.thm6_gap_floored = std::abs(r.thm6 - f6);
    return r;
}

}  // namespace secrecy_ldic
