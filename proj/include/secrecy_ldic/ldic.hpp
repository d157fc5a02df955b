#pragma once

#include "secrecy_ldic/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace secrecy_ldic {

// Raised when an argument violates an operation's precondition.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Fixed-length GF(2) column vector; level 1 is the bottom entry.
// Packed into a 64-bit word: bit (level-1) holds the entry at `level`.
class BitWord {
public:
    static constexpr int max_length = 64;

    BitWord() = default;
    explicit BitWord(int length, std::uint64_t packed = 0);

    // Build from entries listed top -> bottom (the usual drawing order).
    static BitWord from_top_down(const std::vector<int>& bits);

    int length() const { return length_; }
    std::uint64_t packed() const { return bits_; }

    int at(int level) const;
    void set(int level, int value);
    std::vector<int> top_down() const;

    BitWord operator^(const BitWord& other) const;
    bool operator==(const BitWord& other) const = default;

private:
    int length_ = 0;
    std::uint64_t bits_ = 0;
};

enum class Regime { weak, moderate, unity, high_low, high_high, very_high };

std::string to_string(Regime r);

// Symmetric deterministic channel: m direct levels, n cross levels, C coop bits.
struct LdicParams {
    int m = 0;
    int n = 0;
    int C = 0;           // clamped to n
    int C_requested = 0; // value before clamping, kept for reporting

    LdicParams() = default;
    LdicParams(int m, int n, int C);

    int q() const { return m > n ? m : n; }
    // n/m; empty when m == 0 (interference ratio is infinite).
    std::optional<Rational> alpha() const;
    // C/m; empty when m == 0.
    std::optional<Rational> beta() const;
};

// D^s v: output level i carries input level i+s; the top s levels become 0.
BitWord downshift(const BitWord& v, int s);

// y1 = D^{q-m} x1 + D^{q-n} x2 and y2 symmetric, over GF(2).
std::pair<BitWord, BitWord> channel_output(const BitWord& x1, const BitWord& x2, const LdicParams& p);

Regime classify_regime(const LdicParams& p);

}  // namespace secrecy_ldic
