#pragma once

#include "secrecy_ldic/ldic.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace secrecy_ldic {

// One symbolic bit placed on a level. Data(user, i) is message bit i of user `user`;
// Random(source, i) is a random bit generated at transmitter `source` (when it also
// appears at the other transmitter it was shared over the cooperative link).
struct SymBit {
    enum class Kind : std::uint8_t { Zero, Data, Random };
    Kind kind = Kind::Zero;
    int owner = 0;  // user for Data, generating transmitter for Random
    int index = 0;

    static SymBit data(int user, int index) { return {Kind::Data, user, index}; }
    static SymBit random(int source, int index) { return {Kind::Random, source, index}; }

    auto operator<=>(const SymBit&) const = default;
};

std::string to_string(const SymBit& s);

// Exchange the roles of the two users/transmitters on a symbol.
SymBit swap_roles(const SymBit& s);

// Level contents of both transmitters in one slot. A level holds the XOR of the
// listed symbols (empty = Zero).
class SlotPlan {
public:
    explicit SlotPlan(int q);

    int q() const { return q_; }
    const std::vector<SymBit>& at(int tx, int level) const;

    // XOR-toggle `s` into the level (a symbol placed twice cancels).
    void put(int tx, int level, const SymBit& s);
    // Place symbols listed top -> bottom, starting at level `top`.
    void put_down(int tx, int top, const std::vector<SymBit>& syms);
    // Fill transmitter 2 with transmitter 1's layout under swap_roles.
    void mirror_from_tx1();
    // Exchange the transmitters (the second slot of a time-shared plan).
    SlotPlan swapped() const;

    std::vector<SymBit> symbols() const;  // distinct non-zero symbols, sorted
    int data_count(int user) const;
    // Bits transmitter `tx` must learn from the other one: the other user's data and
    // random bits generated at the other transmitter.
    int coop_usage(int tx) const;

private:
    int q_;
    std::array<std::vector<std::vector<SymBit>>, 2> x_;
};

// Derived integer quantities of the block-tiled schemes (moderate and high_low).
struct BlockParams {
    std::int64_t r2 = 0, g = 0, B = 0, t = 0, q_extra = 0, p = 0;
};

// Derived quantities of the 3/2 < alpha < 2 scheme.
struct HighHighParams {
    bool large_C = false;  // C beyond twice the number of Type-III levels
    std::int64_t l = 0, C1 = 0, C2 = 0;
    std::int64_t C_excess = 0, C_third = 0, CT1 = 0, CT2 = 0, CT3 = 0, C_rem = 0, r_d = 0;
};

// Derived quantities of the time-shared odd-m very-high scheme. `C_relay` is the
// cooperative budget left after relaying the n-2m unprotected levels.
struct VeryHighOddParams {
    std::int64_t C_relay = 0;
    std::int64_t uu1 = 0, ul1 = 0, lu1 = 0, ll1 = 0, r1 = 0;
    std::int64_t uu2 = 0, ul2 = 0, lu2 = 0, ll2 = 0, r2 = 0;
};

using RegimeParams = std::variant<std::monostate, BlockParams, HighHighParams, VeryHighOddParams>;

BlockParams moderate_params(const LdicParams& p);
BlockParams high_low_params(const LdicParams& p);
HighHighParams high_high_params(const LdicParams& p);
VeryHighOddParams very_high_odd_params(const LdicParams& p);
RegimeParams regime_params(const LdicParams& p);

struct TransmitPlan {
    LdicParams params;
    std::vector<SlotPlan> slots;
    std::string scheme;              // short layout name
    std::vector<std::string> notes;  // boundary flags worth surfacing

    int data_count(int user) const;
    int max_coop_usage() const;
};

TransmitPlan plan_weak(const LdicParams& p);
TransmitPlan plan_moderate(const LdicParams& p);
TransmitPlan plan_high_low(const LdicParams& p);
TransmitPlan plan_high_high(const LdicParams& p);
TransmitPlan plan_very_high(const LdicParams& p);
// Relay-only alternative for alpha >= 2: the cooperative link carries the other
// user's data, which is sent on levels the unintended receiver cannot see.
TransmitPlan plan_very_high_data_sharing(const LdicParams& p);
// Unity regime (or m = n = 0): the empty plan.
TransmitPlan plan_zero(const LdicParams& p);
// Dispatch on the regime.
TransmitPlan build_plan(const LdicParams& p);

// Symmetric secrecy rate of the regime's scheme, by closed form.
Rational achievable_rate(const LdicParams& p);

// Per-slot codewords (x1, x2) for a concrete bit assignment of the plan's symbols.
// Symbols are keyed per slot: slot k's symbols are independent of slot j's.
using Assignment = std::vector<std::map<SymBit, int>>;
std::vector<std::pair<BitWord, BitWord>> realize(const TransmitPlan& plan, const Assignment& values);

}  // namespace secrecy_ldic
