#pragma once

#include "secrecy_ldic/ldic.hpp"

#include <optional>

namespace secrecy_ldic {

// Upper bound on 2R1 + R2 turned into a symmetric bound; valid for every alpha.
Rational outer_thm1(const LdicParams& p);
// 2C, applicable for alpha >= 2.
std::optional<Rational> outer_thm2(const LdicParams& p);
// 2C + 2m - n, applicable for 1 < alpha < 2.
std::optional<Rational> outer_thm3(const LdicParams& p);
// 0, applicable at alpha = 1.
std::optional<Rational> outer_thm4(const LdicParams& p);

// The normalized five-branch closed form of the minimum, times m. `covered` is false
// when (alpha, beta) falls between the printed branch conditions; the value is then
// the minimum of the individual bounds.
struct ConsolidatedBound {
    Rational value;
    bool covered = true;
};
ConsolidatedBound outer_consolidated(const LdicParams& p);

struct BoundSet {
    Rational thm1;
    std::optional<Rational> thm2, thm3, thm4;
    std::optional<ConsolidatedBound> consolidated;  // empty when m = 0
    Rational minimum;
    // max(m,n) when C > 0, min(m,n) otherwise; reported, never folded into `minimum`.
    Rational rate_cap;
};

BoundSet outer_min(const LdicParams& p);

}  // namespace secrecy_ldic
