#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace boost {

// Under C++20 rewritten comparisons, boost::rational's mixed rational/integer
// equality templates call each other forever. Exact-match non-template
// overloads win overload resolution and break the cycle.
#define SECRECY_LDIC_RATIONAL_EQ(Int)                                                        \
    inline bool operator==(const rational<std::int64_t>& r, Int i) {                          \
        return r.denominator() == 1 && r.numerator() == static_cast<std::int64_t>(i);         \
    }                                                                                        \
    inline bool operator==(Int i, const rational<std::int64_t>& r) { return r == i; }          \
    inline bool operator!=(const rational<std::int64_t>& r, Int i) { return !(r == i); }       \
    inline bool operator!=(Int i, const rational<std::int64_t>& r) { return !(r == i); }
SECRECY_LDIC_RATIONAL_EQ(int)
SECRECY_LDIC_RATIONAL_EQ(long)
SECRECY_LDIC_RATIONAL_EQ(long long)
#undef SECRECY_LDIC_RATIONAL_EQ

}  // namespace boost

namespace secrecy_ldic {

// Exact rate / bound values on the deterministic channel.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

// "p/q" (or "p" when the denominator is one).
std::string to_exact_string(const Rational& r);

// Decimal with six fractional digits.
std::string to_decimal_string(const Rational& r);

// Integer helpers used by the rate formulas.
inline std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace secrecy_ldic
