#include "secrecy_ldic/bounds.hpp"

#include <algorithm>

namespace secrecy_ldic {

namespace {

Rational clamp0(const Rational& r) { return r < 0 ? Rational(0) : r; }

// alpha compared against a rational threshold; m = 0 counts as infinite alpha.
bool alpha_at_least(const LdicParams& p, Rational t) { return p.m == 0 || Rational(p.n, p.m) >= t; }

Rational min_of_bounds(const LdicParams& p) {
    Rational best = outer_thm1(p);
    for (const auto& b : {outer_thm2(p), outer_thm3(p), outer_thm4(p)})
        if (b) best = std::min(best, *b);
    return best;
}

}  // namespace

Rational outer_thm1(const LdicParams& p) {
    if (p.m > 0 && p.n <= p.m) return clamp0(Rational(2 * p.C + 3 * p.m - 2 * p.n, 3));
    return Rational(2 * p.C + p.n, 3);
}

std::optional<Rational> outer_thm2(const LdicParams& p) {
    if (p.n == 0 || !alpha_at_least(p, 2)) return std::nullopt;
    return Rational(2 * p.C);
}

std::optional<Rational> outer_thm3(const LdicParams& p) {
    if (p.m == 0 || p.n <= p.m || p.n >= 2 * p.m) return std::nullopt;
    return Rational(2 * p.C + 2 * p.m - p.n);
}

std::optional<Rational> outer_thm4(const LdicParams& p) {
    if (p.m == 0 || p.n != p.m) return std::nullopt;
    return Rational(0);
}

ConsolidatedBound outer_consolidated(const LdicParams& p) {
    if (p.m == 0) throw DomainError("the normalized bound needs m > 0");
    const Rational a(p.n, p.m), b(p.C, p.m), m(p.m);
    if (a < 1) return {m * (Rational(2, 3) * b - Rational(2, 3) * a + 1)};
    if (a == 1) return {0};
    if ((a < 2 && b > a - Rational(3, 2)) || (a >= 2 && b > a / 4)) return {m * (Rational(2, 3) * b + a / 3)};
    if (a > Rational(3, 2) && a < 2 && b < a - Rational(3, 2)) return {m * (2 * b - a + 2)};
    if (a >= 2 && b <= a / 4) return {m * 2 * b};
    return {min_of_bounds(p), false};
}

BoundSet outer_min(const LdicParams& p) {
    BoundSet s;
    s.thm1 = outer_thm1(p);
    s.thm2 = outer_thm2(p);
    s.thm3 = outer_thm3(p);
    s.thm4 = outer_thm4(p);
    s.minimum = min_of_bounds(p);
    if (p.m > 0) s.consolidated = outer_consolidated(p);
    s.rate_cap = p.C > 0 ? Rational(std::max(p.m, p.n)) : Rational(std::min(p.m, p.n));
    return s;
}

}  // namespace secrecy_ldic
