#pragma once

#include "secrecy_ldic/ldic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <optional>

namespace secrecy_ldic {

// Gaussian symmetric interference channel with a rate-limited cooperative link.
struct GsicParams {
    double P = 0.0;    // per-transmitter power
    double h_d = 1.0;  // direct gain
    double h_c = 0.0;  // cross gain
    double C_G = 0.0;  // cooperative link rate, bits per channel use

    double snr() const { return h_d * h_d * P; }
    double inr() const { return h_c * h_c * P; }
    // log INR / log SNR when both exceed one.
    std::optional<double> alpha() const;
    void validate() const;
};

// Cross gain giving INR = SNR^alpha at direct gain 1 (the sweep convention).
GsicParams gsic_at_alpha(double P, double alpha, double C_G);

// m = (floor(0.5 log2 SNR))+, n = (floor(0.5 log2 INR))+, C = floor(C_G).
LdicParams deterministic_equivalent(const GsicParams& g);

// Power-split variables, all in [0, 1]: t1 splits transmitter 1 between the
// cooperative (jamming-cancelation) part and its private message, u1 splits
// transmitter 2 between private and dummy messages, b1/b2 scale the powers.
struct PowerSplit {
    double t1 = 0.0, u1 = 0.0, b1 = 1.0, b2 = 1.0;
};

enum class GsicScheme { private_and_dummy, dummy_only };

struct DerivedPowers {
    double P1 = 0, P2 = 0;
    double sigma_z2 = 0, sigma_u2 = 0;
    double P_p1 = 0, P_p2 = 0, P_d2 = 0;
    double P_rest = 0;  // transmitter 2's power left after cooperative signalling
};

DerivedPowers derive_powers(const GsicParams& g, const PowerSplit& s, GsicScheme scheme);

struct SlotRates {
    double R1 = 0, R2 = 0;
};

// First-slot secrecy rates of the two users, each clamped at zero. The second slot
// exchanges the roles of the transmitters, so its rates are (R2, R1).
SlotRates private_and_dummy_slot_rates(const GsicParams& g, const PowerSplit& s);
SlotRates dummy_only_slot_rates(const GsicParams& g, const PowerSplit& s);

struct OptimizerOptions {
    int grid_points = 21;     // per axis of the coarse grid
    double min_step = 1e-7;   // coordinate refinement stops below this step
    int workers = 0;          // 0: default_worker_count()
};

struct SymmetricRate {
    double R_s = 0.0;
    GsicScheme scheme = GsicScheme::private_and_dummy;
    PowerSplit slot1;  // slot 2 uses the same split with the transmitters exchanged
    SlotRates rates;   // first-slot rates at slot1
};

// Time-shared symmetric secrecy rate: the private-and-dummy scheme when INR <= SNR,
// the dummy-only scheme otherwise; the split maximizes (R1 + R2) / 2.
SymmetricRate optimize_symmetric_rate(const GsicParams& g, const OptimizerOptions& opt = {});

// ------------------------------------------------------------- outer bounds

// The three covariance blocks entering the genie-aided bound, as functions of
// (SNR, INR, rho).
template <typename Scalar>
struct CovarianceBlocks {
    using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
    Matrix2 sigma_y, sigma_ys, sigma_s;

    // Sigma_y - Sigma_ys Sigma_s^{-1} Sigma_ys^T (requires |rho| < 1 or INR = 0).
    Matrix2 conditional() const { return sigma_y - sigma_ys * sigma_s.inverse() * sigma_ys.transpose(); }
};

template <typename Scalar>
CovarianceBlocks<Scalar> covariance_blocks(Scalar snr, Scalar inr, Scalar rho) {
    using std::sqrt;
    const Scalar si = sqrt(snr * inr);
    const Scalar a = 1 + snr + inr + 2 * rho * si;
    const Scalar b = 2 * si + rho * (snr + inr);
    const Scalar c = si + rho * inr;
    const Scalar d = inr + rho * si;
    CovarianceBlocks<Scalar> k;
    k.sigma_y << a, b, b, a;
    k.sigma_ys << c, d, d, c;
    k.sigma_s << 1 + inr, rho * inr, rho * inr, 1 + inr;
    return k;
}

// SNR + INR + 2 rho sqrt(SNR INR), written as a nonnegative combination so that it
// does not cancel when rho -> -1 and SNR ~ INR.
template <typename Scalar>
Scalar combined_power(Scalar snr, Scalar inr, Scalar rho) {
    using std::sqrt;
    const Scalar sum = sqrt(snr) + sqrt(inr), diff = sqrt(snr) - sqrt(inr);
    return (1 + rho) / 2 * sum * sum + (1 - rho) / 2 * diff * diff;
}

// det of the conditional covariance. All blocks share the eigenvectors (1,1) and
// (1,-1), which gives a product form that stays accurate when the entries are huge
// and the determinant is O(1), and is continuous at |rho| = 1.
template <typename Scalar>
Scalar conditional_determinant(Scalar snr, Scalar inr, Scalar rho) {
    using std::sqrt;
    const Scalar sum = sqrt(snr) + sqrt(inr), diff = sqrt(snr) - sqrt(inr);
    const Scalar plus = 1 + sum * sum * (1 + rho) / (1 + inr * (1 + rho));
    const Scalar minus = 1 + diff * diff * (1 - rho) / (1 + inr * (1 - rho));
    return plus * minus;
}

template <typename Scalar>
Scalar thm5_objective(Scalar snr, Scalar inr, Scalar C_G, Scalar rho) {
    using std::log2;
    const Scalar var_y = 1 + combined_power(snr, inr, rho);
    return (2 * C_G + Scalar(0.5) * log2(var_y) + Scalar(0.5) * log2(conditional_determinant(snr, inr, rho))) / 3;
}

template <typename Scalar>
Scalar thm6_objective(Scalar snr, Scalar inr, Scalar C_G, Scalar rho) {
    using std::log2;
    const Scalar var_y = 1 + combined_power(snr, inr, rho);
    return 2 * C_G + Scalar(0.5) * log2(1 + (snr + snr * snr * (1 - rho * rho)) / var_y);
}

// 0.5 log2(a - b^2/a) with a = Var(y1), b = Cov(y1, y2), via (a-b)(a+b)/a.
template <typename Scalar>
Scalar thm7_objective(Scalar snr, Scalar inr, Scalar rho) {
    using std::log2;
    using std::sqrt;
    const Scalar sum = sqrt(snr) + sqrt(inr), diff = sqrt(snr) - sqrt(inr);
    const Scalar a = 1 + combined_power(snr, inr, rho);
    const Scalar a_minus_b = 1 + (1 - rho) * diff * diff;
    const Scalar a_plus_b = 1 + (1 + rho) * sum * sum;
    return Scalar(0.5) * log2(a_minus_b * a_plus_b / a);
}

struct RhoMaximum {
    double value = 0.0;
    double rho = 0.0;
};

// Maximum of f over rho in [-1, 1]: grid of step `grid_step`, then golden-section
// refinement around the best grid point.
RhoMaximum maximize_over_rho(const std::function<double(double)>& f, double grid_step = 1e-3);

RhoMaximum outer_thm5(const GsicParams& g);
RhoMaximum outer_thm6(const GsicParams& g);
RhoMaximum outer_thm7(const GsicParams& g);

struct GsicBoundSet {
    double thm5 = 0, thm6 = 0, thm7 = 0;  // each clamped at zero
    double minimum = 0;
};

GsicBoundSet gsic_outer_min(const GsicParams& g);

// Large-power correspondence with the deterministic bounds at C_G = 0. The
// deterministic values use the real-valued m = 0.5 log2 SNR, n = 0.5 log2 INR
// (integer levels exactly when the logs are integers); floored values are reported
// alongside for reference.
struct HighSnrAgreement {
    double alpha = 0, P = 0;
    double m = 0, n = 0;           // real-valued levels
    LdicParams floored;            // deterministic_equivalent
    double thm5 = 0, thm6 = 0;
    double thm5_reference = 0;     // (3m-2n)/3 for alpha <= 1, n/3 above
    double thm6_reference = 0;     // m for alpha <= 1, 2m-n on (1,2), 0 from 2 on
    double thm5_gap = 0, thm6_gap = 0;
    double thm5_gap_floored = 0, thm6_gap_floored = 0;
};

HighSnrAgreement high_snr_agreement_check(double alpha, double P);

}  // namespace secrecy_ldic
