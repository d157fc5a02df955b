#include "secrecy_ldic/schemes.hpp"

#include <algorithm>
#include <set>

namespace secrecy_ldic {

namespace {

SymBit A(std::int64_t i) { return SymBit::data(1, static_cast<int>(i)); }
SymBit B(std::int64_t i) { return SymBit::data(2, static_cast<int>(i)); }
// Random bits generated at transmitter 1 / 2.
SymBit D(std::int64_t i) { return SymBit::random(1, static_cast<int>(i)); }
SymBit E(std::int64_t i) { return SymBit::random(2, static_cast<int>(i)); }

using Maker = SymBit (*)(std::int64_t);

// Symbols make(hi..lo) in descending index order, i.e. ready for put_down.
std::vector<SymBit> run(Maker make, std::int64_t hi, std::int64_t lo) {
    std::vector<SymBit> out;
    for (std::int64_t j = hi; j >= lo; --j) out.push_back(make(j));
    return out;
}

// Alternating pair pattern: read bottom-up it is lo_1, hi_1, lo_2, hi_2, ...
// Returned top -> bottom for put_down.
std::vector<SymBit> pair_pattern(std::int64_t count, Maker lo, Maker hi) {
    std::vector<SymBit> seq;
    for (std::int64_t k = 0; k < count; ++k) seq.push_back(k % 2 == 0 ? lo(k / 2 + 1) : hi(k / 2 + 1));
    std::reverse(seq.begin(), seq.end());
    return seq;
}

void require_regime(const LdicParams& p, Regime r, const char* name) {
    if (classify_regime(p) != r) throw DomainError(std::string(name) + ": parameters are not in this regime");
}

TransmitPlan single_slot(const LdicParams& p, SlotPlan s, std::string scheme) {
    TransmitPlan plan{p, {}, std::move(scheme), {}};
    plan.slots.push_back(std::move(s));
    return plan;
}

TransmitPlan time_shared(const LdicParams& p, const SlotPlan& s, std::string scheme) {
    TransmitPlan plan{p, {}, std::move(scheme), {}};
    plan.slots.push_back(s);
    plan.slots.push_back(s.swapped());
    return plan;
}

}  // namespace

std::string to_string(const SymBit& s) {
    switch (s.kind) {
        case SymBit::Kind::Zero: return "0";
        case SymBit::Kind::Data: return std::string(s.owner == 1 ? "a" : "b") + std::to_string(s.index);
        case SymBit::Kind::Random: return std::string(s.owner == 1 ? "d" : "e") + std::to_string(s.index);
    }
    return "?";
}

SymBit swap_roles(const SymBit& s) {
    if (s.kind == SymBit::Kind::Zero) return s;
    return {s.kind, 3 - s.owner, s.index};
}

// ---------------------------------------------------------------- SlotPlan

SlotPlan::SlotPlan(int q) : q_(q) {
    for (auto& tx : x_) tx.assign(static_cast<std::size_t>(q) + 1, {});
}

const std::vector<SymBit>& SlotPlan::at(int tx, int level) const {
    if (tx < 1 || tx > 2 || level < 1 || level > q_) throw DomainError("slot position out of range");
    return x_[tx - 1][level];
}

void SlotPlan::put(int tx, int level, const SymBit& s) {
    if (tx < 1 || tx > 2 || level < 1 || level > q_)
        throw DomainError("placement outside the channel levels: tx " + std::to_string(tx) + " level " +
                          std::to_string(level) + " symbol " + to_string(s));
    if (s.kind == SymBit::Kind::Zero) return;
    auto& cell = x_[tx - 1][level];
    auto it = std::lower_bound(cell.begin(), cell.end(), s);
    if (it != cell.end() && *it == s)
        cell.erase(it);
    else
        cell.insert(it, s);
}

void SlotPlan::put_down(int tx, int top, const std::vector<SymBit>& syms) {
    for (std::size_t k = 0; k < syms.size(); ++k) put(tx, top - static_cast<int>(k), syms[k]);
}

void SlotPlan::mirror_from_tx1() {
    for (int level = 1; level <= q_; ++level) {
        auto& dst = x_[1][level];
        dst.clear();
        for (const auto& s : x_[0][level]) dst.push_back(swap_roles(s));
        std::sort(dst.begin(), dst.end());
    }
}

SlotPlan SlotPlan::swapped() const {
    SlotPlan out(q_);
    for (int tx = 1; tx <= 2; ++tx)
        for (int level = 1; level <= q_; ++level)
            for (const auto& s : x_[tx - 1][level]) out.put(3 - tx, level, swap_roles(s));
    return out;
}

std::vector<SymBit> SlotPlan::symbols() const {
    std::set<SymBit> all;
    for (const auto& tx : x_)
        for (const auto& cell : tx) all.insert(cell.begin(), cell.end());
    return {all.begin(), all.end()};
}

int SlotPlan::data_count(int user) const {
    int count = 0;
    for (const auto& s : symbols())
        if (s.kind == SymBit::Kind::Data && s.owner == user) ++count;
    return count;
}

int SlotPlan::coop_usage(int tx) const {
    std::set<SymBit> foreign;
    for (const auto& cell : x_[tx - 1])
        for (const auto& s : cell)
            if (s.owner != tx) foreign.insert(s);
    return static_cast<int>(foreign.size());
}

int TransmitPlan::data_count(int user) const {
    int total = 0;
    for (const auto& s : slots) total += s.data_count(user);
    return total;
}

int TransmitPlan::max_coop_usage() const {
    int worst = 0;
    for (const auto& s : slots) worst = std::max({worst, s.coop_usage(1), s.coop_usage(2)});
    return worst;
}

// ------------------------------------------------------- derived parameters

namespace {

BlockParams block_params(std::int64_t r2, std::int64_t g) {
    BlockParams b;
    b.r2 = r2;
    b.g = g;
    b.B = g / (3 * r2);
    b.t = g % (3 * r2);
    b.q_extra = std::min(pos(b.t - r2), r2);
    b.p = 3 * b.B * r2;
    return b;
}

}  // namespace

BlockParams moderate_params(const LdicParams& p) {
    const std::int64_t r2 = p.m - p.n;
    return block_params(r2, pos(p.n - (r2 + p.C)));
}

BlockParams high_low_params(const LdicParams& p) {
    return block_params(p.n - p.m, pos(p.m - p.C));
}

HighHighParams high_high_params(const LdicParams& p) {
    HighHighParams h;
    const std::int64_t m = p.m, n = p.n, C = p.C;
    h.l = 2 * m - n;
    h.large_C = C > 4 * n - 6 * m;
    if (!h.large_C) {
        h.C1 = C / 2;
        h.C2 = C - h.C1;
        return h;
    }
    h.C_excess = C - (4 * n - 6 * m);
    h.C_third = ceil_div(h.C_excess, 3);
    h.CT3 = std::min(h.l, h.C_third);
    h.C_rem = pos(h.C_excess - h.CT3);
    h.CT1 = std::min(ceil_div(h.C_rem, 2), h.l);
    h.CT2 = std::min(h.l, pos(h.C_rem - h.CT1));
    h.r_d = std::min(pos(h.l - h.CT3), h.l - h.CT2);
    return h;
}

VeryHighOddParams very_high_odd_params(const LdicParams& p) {
    VeryHighOddParams v;
    const std::int64_t m = p.m, n = p.n;
    v.C_relay = p.C - (n - 2 * m);
    v.uu1 = ceil_div(v.C_relay, 2);
    v.lu2 = v.uu1;
    v.ul1 = pos(m - v.uu1);
    v.ll2 = v.ul1;
    v.r1 = ceil_div(v.ul1, 2);
    v.lu1 = pos(v.C_relay - v.uu1 - v.r1);
    v.ll1 = std::min(2 * v.r1, pos(m - v.lu1));
    v.ul2 = v.ll1;
    v.r2 = std::max(ceil_div(v.ll2, 2), v.ul2 / 2);
    v.uu2 = pos(v.C_relay - v.lu2 - v.r2);
    return v;
}

namespace {

// Which layout the very-high scheme uses.
enum class VeryHighCase { empty, pairs_only, pairs_and_relay, time_shared_even, relay_only, time_shared_odd };

VeryHighCase very_high_case(const LdicParams& p) {
    const std::int64_t m = p.m, n = p.n, C = p.C;
    if (C == 0) return VeryHighCase::empty;
    if (m % 2 == 0) {
        if (C <= m / 2) return VeryHighCase::pairs_only;
        if (C <= n - 3 * m / 2) return VeryHighCase::pairs_and_relay;
        if (2 * C < 2 * n - m) return VeryHighCase::time_shared_even;
        return VeryHighCase::relay_only;
    }
    if (2 * C <= m + 1) return VeryHighCase::pairs_only;
    if (2 * C <= 2 * n - 3 * m + 1) return VeryHighCase::pairs_and_relay;
    return VeryHighCase::time_shared_odd;
}

}  // namespace

RegimeParams regime_params(const LdicParams& p) {
    if (p.m == 0 && p.n == 0) return std::monostate{};
    switch (classify_regime(p)) {
        case Regime::moderate: return moderate_params(p);
        case Regime::high_low: return high_low_params(p);
        case Regime::high_high: return high_high_params(p);
        case Regime::very_high:
            if (very_high_case(p) == VeryHighCase::time_shared_odd) return very_high_odd_params(p);
            return std::monostate{};
        default: return std::monostate{};
    }
}

// ------------------------------------------------------------ rate formulas

Rational achievable_rate(const LdicParams& p) {
    const std::int64_t m = p.m, n = p.n, C = p.C;
    if (m == 0 && n == 0) return 0;
    switch (classify_regime(p)) {
        case Regime::weak: return Rational(m - n + C);
        case Regime::moderate: {
            const auto b = moderate_params(p);
            return Rational(b.r2 + b.B * b.r2 + b.q_extra + C);
        }
        case Regime::unity: return 0;
        case Regime::high_low: {
            const auto b = high_low_params(p);
            return Rational(b.B * b.r2 + b.q_extra + C);
        }
        case Regime::high_high: {
            const auto h = high_high_params(p);
            if (!h.large_C) return Rational(2 * m - n + C);
            return Rational(4 * n - 6 * m + h.CT1 + h.CT2 + h.CT3 + h.r_d);
        }
        case Regime::very_high: break;
    }
    switch (very_high_case(p)) {
        case VeryHighCase::empty: return 0;
        case VeryHighCase::pairs_only: return Rational(std::min(2 * C, m));
        case VeryHighCase::pairs_and_relay:
            if (m % 2 == 0) return Rational(m / 2 + C);
            return Rational(m + std::min(C - (m + 1) / 2, n - 2 * m));
        case VeryHighCase::time_shared_even: return Rational(2 * n - m + 2 * C, 4);
        case VeryHighCase::relay_only: return Rational(C);
        case VeryHighCase::time_shared_odd: {
            const auto v = very_high_odd_params(p);
            return Rational(n - 2 * m) + Rational(v.ul1 + 2 * v.uu1 + v.uu2 + v.lu1 + v.ul2, 2);
        }
    }
    return 0;
}

// ----------------------------------------------------------------- layouts

TransmitPlan plan_zero(const LdicParams& p) {
    SlotPlan s(p.q());
    return single_slot(p, s, "silent");
}

TransmitPlan plan_weak(const LdicParams& p) {
    require_regime(p, Regime::weak, "plan_weak");
    SlotPlan s(p.q());
    const int r = p.m - p.n;
    // Own data below the cross-link footprint plus C more levels whose leakage is
    // canceled by the partner's cooperative bits XORed underneath.
    for (int i = 1; i <= r + p.C; ++i) s.put(1, i, A(i));
    for (int j = 1; j <= p.C; ++j) s.put(1, j, B(r + j));
    s.mirror_from_tx1();
    return single_slot(p, s, "weak");
}

TransmitPlan plan_moderate(const LdicParams& p) {
    require_regime(p, Regime::moderate, "plan_moderate");
    const auto b = moderate_params(p);
    const int m = p.m, r2 = static_cast<int>(b.r2);
    SlotPlan s(p.q());
    for (int i = 1; i <= r2 + p.C; ++i) s.put(1, i, A(i));
    for (int j = 1; j <= p.C; ++j) s.put(1, j, B(r2 + j));
    // Blocks of r2 levels from the top: data, own random (jams the partner's view
    // of the data block above it), zero.
    for (int blk = 1; blk <= 3 * b.B; ++blk) {
        const int top = m - (blk - 1) * r2;
        for (int k = 0; k < r2; ++k) {
            const int level = top - k;
            if (blk % 3 == 1) s.put(1, level, A(level));
            if (blk % 3 == 2) s.put(1, level, D(level));
        }
    }
    const int base = static_cast<int>(b.p);
    for (int k = 0; k < b.q_extra; ++k) s.put(1, m - base - k, A(m - base - k));
    for (int k = 0; k < b.q_extra; ++k) s.put(1, m - base - r2 - k, D(m - base - r2 - k));
    s.mirror_from_tx1();
    auto plan = single_slot(p, s, "moderate");
    if (b.t > 0 && b.t <= b.r2) plan.notes.push_back("leftover levels shorter than one block unit left silent");
    return plan;
}

TransmitPlan plan_high_low(const LdicParams& p) {
    require_regime(p, Regime::high_low, "plan_high_low");
    const auto b = high_low_params(p);
    const int n = p.n, r2 = static_cast<int>(b.r2);
    SlotPlan s(p.q());
    // Cooperative bits at the bottom: the partner's data on the levels the intended
    // receiver does not see, own data protected by cancelation above that.
    for (int j = 1; j <= p.C; ++j) s.put(1, j, B(j));
    for (int j = 1; j <= pos(p.C - r2); ++j) s.put(1, j, A(r2 + j));
    // Blocks of r2 levels from the top: own random, data, zero.
    for (int blk = 1; blk <= 3 * b.B; ++blk) {
        const int top = n - (blk - 1) * r2;
        for (int k = 0; k < r2; ++k) {
            const int level = top - k;
            if (blk % 3 == 1) s.put(1, level, D(level));
            if (blk % 3 == 2) s.put(1, level, A(level));
        }
    }
    const int base = static_cast<int>(b.p);
    for (int k = 0; k < b.q_extra; ++k) s.put(1, n - base - k, D(n - base - k));
    for (int k = 0; k < b.q_extra; ++k) s.put(1, n - base - r2 - k, A(n - base - r2 - k));
    s.mirror_from_tx1();
    auto plan = single_slot(p, s, "high_low");
    if (b.t > 0 && b.t <= b.r2) plan.notes.push_back("leftover levels shorter than one block unit left silent");
    return plan;
}

TransmitPlan plan_high_high(const LdicParams& p) {
    require_regime(p, Regime::high_high, "plan_high_high");
    const auto h = high_high_params(p);
    const int m = p.m, n = p.n;
    const std::int64_t l = h.l;
    SlotPlan s(p.q());
    if (!h.large_C) {
        // Own random on the top l levels, own data on the band the partner's
        // receiver sees under that random.
        for (int k = 0; k < l; ++k) s.put(1, n - k, D(n - k));
        for (int j = 1; j <= l; ++j) s.put(1, n - m + j, A(j));
        for (int j = m + 1; j <= m + h.C2; ++j) s.put(1, j, B(j));
        for (int j = n - m - static_cast<int>(h.C1) + 1; j <= n - m; ++j) s.put(1, j, B(j));
        for (int k = 1; k <= h.C2; ++k) s.put(1, static_cast<int>(l) + k, A(m + k));
        s.mirror_from_tx1();
        return single_slot(p, s, "high_high");
    }
    const std::int64_t mid = 2 * n - 3 * m;
    // Partner data protecting own data on the upper and lower bands.
    s.put_down(1, static_cast<int>(n - l), run(B, 2 * (n - m), m + 1));
    s.put_down(1, static_cast<int>(n - 2 * l - mid), run(B, n - m, 2 * m - n + 1));
    // Extra cooperative bits of the three level types.
    s.put_down(1, static_cast<int>(n - (l - h.CT1)), run(B, 2 * (n - m) + h.CT1, 2 * (n - m) + 1));
    s.put_down(1, static_cast<int>(h.CT3), run(B, h.CT3, 1));
    s.put_down(1, static_cast<int>(n - (m - h.CT2)), run(B, n - m + h.CT2, n - m + 1));
    // Own data.
    s.put_down(1, n - m, run(A, 2 * (n - m), m + 1));
    s.put_down(1, static_cast<int>(h.CT2), run(A, n - m + h.CT2, n - m + 1));
    s.put_down(1, static_cast<int>(n - (m - h.CT1)), run(A, 2 * (n - m) + h.CT1, 2 * (n - m) + 1));
    // Jammed data on the remaining Type-II levels.
    std::vector<SymBit> jam;
    for (std::int64_t k = 0; k < h.r_d; ++k) jam.push_back(D(n - k));
    s.put_down(1, n, jam);
    s.put_down(1, m, run(A, 2 * m - n, 2 * m - n - h.r_d + 1));
    s.mirror_from_tx1();
    return single_slot(p, s, "high_high_large_C");
}

TransmitPlan plan_very_high(const LdicParams& p) {
    require_regime(p, Regime::very_high, "plan_very_high");
    const int m = p.m, n = p.n, C = p.C;
    const int h = n - m;
    SlotPlan s(p.q());
    switch (very_high_case(p)) {
        case VeryHighCase::empty:
            return single_slot(p, s, "silent");
        case VeryHighCase::pairs_only: {
            // Shared random pairs: each own data bit is jammed at the partner's
            // receiver and the jam is canceled at the intended one.
            const int k = std::min(2 * C, m);
            for (int j = 1; j <= k; ++j) s.put(1, h + j, A(j));
            s.put_down(1, k, pair_pattern(k, D, E));
            s.put_down(1, h + k, pair_pattern(k, E, D));
            s.mirror_from_tx1();
            return single_slot(p, s, "shared_random");
        }
        case VeryHighCase::pairs_and_relay: {
            const int half = m % 2 == 0 ? m / 2 : (m + 1) / 2;
            const int relayed = C - half;
            for (int j = 1; j <= m; ++j) s.put(1, h + j, A(j));
            s.put_down(1, m, pair_pattern(m, D, E));
            s.put_down(1, n, pair_pattern(m, E, D));
            for (int j = m + 1; j <= m + relayed; ++j) s.put(1, j, B(j));
            s.mirror_from_tx1();
            return single_slot(p, s, "shared_random_and_relay");
        }
        case VeryHighCase::time_shared_even: {
            const int C1 = C - m / 2 - n + 2 * m;
            const int k = m - C1;
            s.put_down(1, m, pair_pattern(m, D, E));
            s.put_down(1, n, run(B, n, n - C1 + 1));
            s.put_down(1, n - C1, run(A, k, 1));
            s.put_down(1, n - C1, pair_pattern(k, E, D));
            s.put_down(1, n - m, run(B, n - m, m + 1));
            s.put_down(2, n, run(B, m, 1));
            s.put_down(2, n, pair_pattern(m, D, E));
            s.put_down(2, m, run(B, n, n - C1 + 1));
            s.put_down(2, m, run(A, m, m - C1 + 1));
            s.put_down(2, m - C1, pair_pattern(k, E, D));
            s.put_down(2, n - m, run(A, n - m, m + 1));
            return time_shared(p, s, "time_shared_even");
        }
        case VeryHighCase::relay_only:
            return plan_very_high_data_sharing(p);
        case VeryHighCase::time_shared_odd: {
            const auto v = very_high_odd_params(p);
            s.put_down(1, n, run(B, n, n - v.uu1 + 1));
            s.put_down(1, static_cast<int>(n - v.uu1), run(A, v.ul1, 1));
            s.put_down(1, static_cast<int>(n - v.uu1), pair_pattern(v.ul1, E, D));
            s.put_down(1, m, run(B, m, m - v.lu1 + 1));
            s.put_down(1, static_cast<int>(v.ll1), pair_pattern(v.ll1, D, E));
            s.put_down(1, n - m, run(B, n - m, m + 1));
            s.put_down(1, m, run(A, n, n - v.uu2 + 1));
            s.put_down(2, static_cast<int>(n - m + v.ul2), run(B, v.ul2, 1));
            s.put_down(2, m, run(B, n, n - v.lu2 + 1));
            s.put_down(2, n, run(A, n, n - v.uu2 + 1));
            s.put_down(2, n - m, run(A, n - m, m + 1));
            s.put_down(2, m, run(A, m, m - v.lu2 + 1));
            s.put_down(2, static_cast<int>(v.ll2), pair_pattern(v.ll2, E, D));
            s.put_down(2, static_cast<int>(n - m + v.ul2), pair_pattern(v.ul2, D, E));
            return time_shared(p, s, "time_shared_odd");
        }
    }
    return single_slot(p, s, "silent");
}

TransmitPlan plan_very_high_data_sharing(const LdicParams& p) {
    require_regime(p, Regime::very_high, "plan_very_high_data_sharing");
    const int m = p.m, n = p.n, C = p.C;
    SlotPlan s(p.q());
    // Pure relaying: each transmitter forwards the partner's C data bits on its
    // bottom levels, which only the partner's receiver sees (over the cross link).
    // Forwarded bits that would also land at the unintended receiver are canceled
    // there by the owner sending the same bit on the level that aligns with them.
    for (int j = 1; j <= C; ++j) s.put(1, j, B(j));
    for (int j = 1; j <= C - (n - m); ++j) s.put(1, j, A(n - m + j));
    s.mirror_from_tx1();
    return single_slot(p, s, "data_sharing");
}

TransmitPlan build_plan(const LdicParams& p) {
    if (p.m == 0 && p.n == 0) return plan_zero(p);
    switch (classify_regime(p)) {
        case Regime::weak: return plan_weak(p);
        case Regime::moderate: return plan_moderate(p);
        case Regime::unity: return plan_zero(p);
        case Regime::high_low: return plan_high_low(p);
        case Regime::high_high: return plan_high_high(p);
        case Regime::very_high: return plan_very_high(p);
    }
    return plan_zero(p);
}

std::vector<std::pair<BitWord, BitWord>> realize(const TransmitPlan& plan, const Assignment& values) {
    if (values.size() != plan.slots.size()) throw DomainError("assignment must cover every slot");
    std::vector<std::pair<BitWord, BitWord>> out;
    const int q = plan.params.q();
    for (std::size_t k = 0; k < plan.slots.size(); ++k) {
        const auto& slot = plan.slots[k];
        BitWord x[2] = {BitWord(q), BitWord(q)};
        for (int tx = 1; tx <= 2; ++tx)
            for (int level = 1; level <= q; ++level) {
                int bit = 0;
                for (const auto& sym : slot.at(tx, level)) {
                    auto it = values[k].find(sym);
                    if (it == values[k].end()) throw DomainError("assignment misses symbol " + to_string(sym));
                    bit ^= it->second & 1;
                }
                x[tx - 1].set(level, bit);
            }
        out.emplace_back(x[0], x[1]);
    }
    return out;
}

}  // namespace secrecy_ldic
