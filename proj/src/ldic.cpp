#include "secrecy_ldic/ldic.hpp"

#include <cstdio>

namespace secrecy_ldic {

std::string to_exact_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

BitWord::BitWord(int length, std::uint64_t packed) : length_(length) {
    if (length < 0 || length > max_length) throw DomainError("BitWord length out of range");
    const std::uint64_t mask = length == 64 ? ~0ULL : ((1ULL << length) - 1);
    bits_ = packed & mask;
}

BitWord BitWord::from_top_down(const std::vector<int>& bits) {
    BitWord w(static_cast<int>(bits.size()));
    const int q = w.length();
    for (int k = 0; k < q; ++k) w.set(q - k, bits[k]);
    return w;
}

int BitWord::at(int level) const {
    if (level < 1 || level > length_) throw DomainError("BitWord level out of range");
    return static_cast<int>((bits_ >> (level - 1)) & 1ULL);
}

void BitWord::set(int level, int value) {
    if (level < 1 || level > length_) throw DomainError("BitWord level out of range");
    if (value != 0 && value != 1) throw DomainError("BitWord entries are 0 or 1");
    const std::uint64_t bit = 1ULL << (level - 1);
    bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

std::vector<int> BitWord::top_down() const {
    std::vector<int> out;
    for (int level = length_; level >= 1; --level) out.push_back(at(level));
    return out;
}

BitWord BitWord::operator^(const BitWord& other) const {
    if (length_ != other.length_) throw DomainError("BitWord length mismatch");
    return BitWord(length_, bits_ ^ other.bits_);
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::weak: return "weak";
        case Regime::moderate: return "moderate";
        case Regime::unity: return "unity";
        case Regime::high_low: return "high_low";
        case Regime::high_high: return "high_high";
        case Regime::very_high: return "very_high";
    }
    return "?";
}

LdicParams::LdicParams(int m_, int n_, int C_) : m(m_), n(n_), C(C_ > n_ ? n_ : C_), C_requested(C_) {
    if (m < 0 || n < 0 || C_ < 0) throw DomainError("m, n, C must be nonnegative");
}

std::optional<Rational> LdicParams::alpha() const {
    if (m == 0) return std::nullopt;
    return Rational(n, m);
}

std::optional<Rational> LdicParams::beta() const {
    if (m == 0) return std::nullopt;
    return Rational(C, m);
}

BitWord downshift(const BitWord& v, int s) {
    if (s < 0 || s > v.length()) throw DomainError("shift exceeds word length");
    if (s == v.length()) return BitWord(v.length());
    return BitWord(v.length(), v.packed() >> s);
}

std::pair<BitWord, BitWord> channel_output(const BitWord& x1, const BitWord& x2, const LdicParams& p) {
    const int q = p.q();
    if (x1.length() != q || x2.length() != q) throw DomainError("inputs must have length max(m, n)");
    BitWord y1 = downshift(x1, q - p.m) ^ downshift(x2, q - p.n);
    BitWord y2 = downshift(x2, q - p.m) ^ downshift(x1, q - p.n);
    return {y1, y2};
}

Regime classify_regime(const LdicParams& p) {
    if (p.m == 0 && p.n == 0) throw DomainError("regime undefined for m = n = 0");
    if (p.m == 0) return Regime::very_high;
    const Rational a(p.n, p.m);
    if (a <= Rational(2, 3)) return Regime::weak;
    if (a < 1) return Regime::moderate;
    if (a == 1) return Regime::unity;
    if (a <= Rational(3, 2)) return Regime::high_low;
    if (a < 2) return Regime::high_high;
    return Regime::very_high;
}

}  // namespace secrecy_ldic
