#pragma once

#include "secrecy_ldic/schemes.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace secrecy_ldic {

// Enumeration would exceed the configured symbol cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A plan violates an internal consistency rule (e.g. unequal per-user data counts).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    int symbol_cap = 24;  // at most 2^cap realizations per enumeration
    int workers = 0;      // 0: default_worker_count()
};

// One cell of the joint histogram. Messages are packed with user i's data bits in
// plan order; receiver words are packed per slot (slot k occupies bits [k*q, (k+1)*q)).
struct JointKey {
    std::uint64_t w1 = 0, w2 = 0, y1 = 0, y2 = 0;
    auto operator<=>(const JointKey&) const = default;
};

// Exact histogram over (W1, W2, Y1, Y2) for uniform i.i.d. symbols.
struct JointCounts {
    std::uint64_t total = 0;
    std::vector<std::pair<JointKey, std::uint64_t>> table;  // sorted by key
    bool operator==(const JointCounts&) const = default;
};

enum Variable : unsigned { W1 = 1, W2 = 2, Y1 = 4, Y2 = 8 };
using VariableSet = unsigned;  // bitwise OR of Variable

// An information quantity in bits. `exactly_zero` comes from an integer test and
// never from the floating value; `exact` is set when every log term is an integer
// power of two (always the case for linear plans with uniform symbols).
struct InfoValue {
    double bits = 0.0;
    bool exactly_zero = true;
    std::optional<Rational> exact;
};

// Enumerate every assignment of all symbols of the plan (all slots jointly).
JointCounts enumerate_system(const TransmitPlan& plan, const OracleOptions& opt = {});
// Enumerate the symbols of a single slot.
JointCounts enumerate_slot(const TransmitPlan& plan, std::size_t slot, const OracleOptions& opt = {});

// I(A;B) from integer counts; A and B must be disjoint and nonempty.
InfoValue exact_mutual_information(const JointCounts& counts, VariableSet A, VariableSet B);
// H(A|B) from integer counts.
InfoValue exact_conditional_entropy(const JointCounts& counts, VariableSet A, VariableSet B);

struct SecrecyReport {
    InfoValue i_w1_y2, i_w2_y1;              // over all slots jointly
    InfoValue h_w1_given_y1, h_w2_given_y2;  // over all slots jointly
    std::vector<InfoValue> slot_i_w1_y2, slot_i_w2_y1;
    std::vector<InfoValue> slot_h_w1_given_y1, slot_h_w2_given_y2;
    bool secure = false;
    bool decodable = false;
    // True when the joint values were assembled from independent per-slot
    // enumerations (slots share no symbols, so the quantities add up exactly).
    bool slot_factorized = false;
    int symbol_count = 0;
};

SecrecyReport verify_secrecy(const TransmitPlan& plan, const OracleOptions& opt = {});
SecrecyReport verify_decodability(const TransmitPlan& plan, const OracleOptions& opt = {});

// Distinct data symbols per user divided by the number of slots.
Rational counted_rate(const TransmitPlan& plan);

}  // namespace secrecy_ldic
