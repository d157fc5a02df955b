#include "secrecy_ldic/oracle.hpp"

#include "secrecy_ldic/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace secrecy_ldic {

namespace {

__extension__ using u128 = unsigned __int128;

struct KeyHash {
    std::size_t operator()(const JointKey& k) const {
        std::uint64_t h = k.w1 * 0x9E3779B97F4A7C15ULL;
        h ^= k.w2 + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        h ^= k.y1 + 0x85EBCA77C2B2AE63ULL + (h << 6) + (h >> 2);
        h ^= k.y2 + 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using CountMap = std::unordered_map<JointKey, std::uint64_t, KeyHash>;

// The plan restricted to some slots as a linear map over GF(2): every symbol is a
// variable, and flipping variable k toggles fixed bit patterns of y1 and y2.
struct LinearSystem {
    int d1 = 0, d2 = 0;  // data variables of user 1 and 2 come first, in that order
    int y_bits = 0;      // width of each receiver word (slots * q)
    std::vector<std::uint64_t> to_y1, to_y2;
    int variables() const { return static_cast<int>(to_y1.size()); }
};

LinearSystem linearize(const TransmitPlan& plan, const std::vector<std::size_t>& slots) {
    const auto& p = plan.params;
    const int q = p.q();
    if (static_cast<int>(slots.size()) * q > 64)
        throw ResourceError("receiver words of all slots do not fit in 64 bits");

    struct Var {
        int group;  // 0: data user 1, 1: data user 2, 2: random
        std::size_t slot_pos;
        SymBit sym;
    };
    std::vector<Var> vars;
    for (std::size_t k = 0; k < slots.size(); ++k)
        for (const auto& s : plan.slots[slots[k]].symbols()) {
            const int group = s.kind == SymBit::Kind::Data ? s.owner - 1 : 2;
            vars.push_back({group, k, s});
        }
    std::stable_sort(vars.begin(), vars.end(), [](const Var& a, const Var& b) { return a.group < b.group; });

    LinearSystem sys;
    sys.y_bits = static_cast<int>(slots.size()) * q;
    for (const auto& v : vars) {
        if (v.group == 0) ++sys.d1;
        if (v.group == 1) ++sys.d2;
        std::uint64_t y[2] = {0, 0};
        const auto& slot = plan.slots[slots[v.slot_pos]];
        const int offset = static_cast<int>(v.slot_pos) * q;
        for (int tx = 1; tx <= 2; ++tx)
            for (int level = 1; level <= q; ++level) {
                const auto& cell = slot.at(tx, level);
                if (!std::binary_search(cell.begin(), cell.end(), v.sym)) continue;
                // Direct link to receiver tx, cross link to the other receiver.
                const int direct = level - (q - p.m);
                const int cross = level - (q - p.n);
                if (direct >= 1) y[tx - 1] ^= 1ULL << (offset + direct - 1);
                if (cross >= 1) y[2 - tx] ^= 1ULL << (offset + cross - 1);
            }
        sys.to_y1.push_back(y[0]);
        sys.to_y2.push_back(y[1]);
    }
    return sys;
}

JointKey project(const JointKey& k, VariableSet vars) {
    return {vars & W1 ? k.w1 : 0, vars & W2 ? k.w2 : 0, vars & Y1 ? k.y1 : 0, vars & Y2 ? k.y2 : 0};
}

// Open-addressing counter keyed by a 64-bit value. Slots store key + 1 so that
// zero marks an empty slot; the one key that would wrap is counted separately.
class FlatCounter {
public:
    FlatCounter() { rehash(1024); }

    void add(std::uint64_t key, std::uint64_t n = 1) {
        if (key == ~0ULL) {
            if (!top_count_) ++size_;
            top_count_ += n;
            return;
        }
        const std::uint64_t tag = key + 1;
        std::size_t i = slot(key);
        while (cells_[i].tag != tag) {
            if (cells_[i].tag == 0) {
                cells_[i].tag = tag;
                if (++size_ * 2 > cells_.size()) {
                    rehash(cells_.size() * 2);
                    i = slot(key);
                    while (cells_[i].tag != tag) i = (i + 1) & mask_;
                }
                break;
            }
            i = (i + 1) & mask_;
        }
        cells_[i].count += n;
    }

    std::size_t size() const { return size_; }

    // (key, count) pairs in increasing key order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted() const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        out.reserve(size_);
        for (const auto& c : cells_)
            if (c.tag) out.emplace_back(c.tag - 1, c.count);
        if (top_count_) out.emplace_back(~0ULL, top_count_);
        std::sort(out.begin(), out.end());
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (const auto& c : cells_)
            if (c.tag) f(c.tag - 1, c.count);
        if (top_count_) f(~0ULL, top_count_);
    }

private:
    struct Cell {
        std::uint64_t tag = 0, count = 0;
    };

    std::size_t slot(std::uint64_t key) const {
        // splitmix64 finalizer
        key ^= key >> 30;
        key *= 0xBF58476D1CE4E5B9ULL;
        key ^= key >> 27;
        key *= 0x94D049BB133111EBULL;
        key ^= key >> 31;
        return static_cast<std::size_t>(key) & mask_;
    }

    void rehash(std::size_t capacity) {
        std::vector<Cell> old(capacity);
        cells_.swap(old);
        mask_ = capacity - 1;
        for (const auto& c : old)
            if (c.tag) {
                std::size_t i = slot(c.tag - 1);
                while (cells_[i].tag) i = (i + 1) & mask_;
                cells_[i] = c;
            }
    }

    std::vector<Cell> cells_;
    std::size_t mask_ = 0, size_ = 0;
    std::uint64_t top_count_ = 0;
};

// Histogram of one view. Keys are packed into 64 bits when the view is narrow
// enough (always the case for plans within the enumeration cap and q <= 32),
// otherwise a node-based map keyed by the full JointKey is used.
class Tally {
public:
    Tally(VariableSet view, const LinearSystem& sys) : view_(view) {
        if (view & W1) width_[0] = sys.d1;
        if (view & W2) width_[1] = sys.d2;
        if (view & Y1) width_[2] = sys.y_bits;
        if (view & Y2) width_[3] = sys.y_bits;
        packed_ = width_[0] + width_[1] + width_[2] + width_[3] <= 64;
    }

    void add(const JointKey& key) {
        const JointKey k = project(key, view_);
        if (packed_)
            flat_.add(pack(k));
        else
            ++sparse_[k];
    }

    // Accumulates into `out`; the result does not depend on insertion order.
    void drain_into(std::vector<std::pair<JointKey, std::uint64_t>>& out) const {
        if (packed_)
            flat_.for_each([&](std::uint64_t k, std::uint64_t n) { out.emplace_back(unpack(k), n); });
        else
            out.insert(out.end(), sparse_.begin(), sparse_.end());
    }

private:
    std::uint64_t shl(std::uint64_t x, int s) const { return s >= 64 ? 0 : x << s; }
    std::uint64_t shr(std::uint64_t x, int s) const { return s >= 64 ? 0 : x >> s; }
    std::uint64_t mask(int f) const { return width_[f] >= 64 ? ~0ULL : (1ULL << width_[f]) - 1; }
    std::uint64_t pack(const JointKey& k) const {
        return shl(shl(shl(k.w1, width_[1]) | k.w2, width_[2]) | k.y1, width_[3]) | k.y2;
    }
    JointKey unpack(std::uint64_t i) const {
        JointKey k;
        k.y2 = i & mask(3), i = shr(i, width_[3]);
        k.y1 = i & mask(2), i = shr(i, width_[2]);
        k.w2 = i & mask(1), i = shr(i, width_[1]);
        k.w1 = i & mask(0);
        return k;
    }

    VariableSet view_;
    int width_[4] = {0, 0, 0, 0};
    bool packed_ = true;
    FlatCounter flat_;
    CountMap sparse_;
};

// Walk all 2^N assignments and tally one histogram per requested view (a subset of
// W1, W2, Y1, Y2; the other key fields stay zero). The assignment space is split
// into chunks on the top variables; each worker owns private tallies for its chunks
// and the tallies are summed afterwards, so the result is independent of scheduling.
std::vector<JointCounts> enumerate_views(const LinearSystem& sys, const std::vector<VariableSet>& views,
                                         const OracleOptions& opt) {
    const int N = sys.variables();
    if (N > opt.symbol_cap || N > 62)
        throw ResourceError("enumeration needs 2^" + std::to_string(N) + " realizations; cap is 2^" +
                            std::to_string(opt.symbol_cap));
    const int split = std::min(N, 6);
    const int low = N - split;
    const std::size_t chunks = std::size_t{1} << split;
    const std::uint64_t w1_mask = (1ULL << sys.d1) - 1;
    const std::uint64_t w2_mask = (1ULL << sys.d2) - 1;
    const std::size_t V = views.size();
    const int requested = opt.workers > 0 ? opt.workers : default_worker_count();
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(requested), chunks);

    std::vector<std::vector<Tally>> tallies(workers);
    parallel_for(workers, static_cast<int>(workers), [&](std::size_t w) {
        auto& mine = tallies[w];
        for (const auto view : views) mine.emplace_back(view, sys);
        for (std::size_t chunk = w; chunk < chunks; chunk += workers) {
            std::uint64_t v = static_cast<std::uint64_t>(chunk) << low;
            std::uint64_t y1 = 0, y2 = 0;
            for (int k = 0; k < N; ++k)
                if ((v >> k) & 1ULL) {
                    y1 ^= sys.to_y1[k];
                    y2 ^= sys.to_y2[k];
                }
            auto record = [&] {
                const JointKey key{v & w1_mask, (v >> sys.d1) & w2_mask, y1, y2};
                for (auto& t : mine) t.add(key);
            };
            record();
            // Gray-code walk over the low variables: one flip per step.
            const std::uint64_t steps = 1ULL << low;
            for (std::uint64_t j = 1; j < steps; ++j) {
                const int k = std::countr_zero(j);
                v ^= 1ULL << k;
                y1 ^= sys.to_y1[k];
                y2 ^= sys.to_y2[k];
                record();
            }
        }
    });

    std::vector<JointCounts> out(V);
    for (std::size_t i = 0; i < V; ++i) {
        std::vector<std::pair<JointKey, std::uint64_t>> all;
        for (auto& mine : tallies) mine[i].drain_into(all);
        std::sort(all.begin(), all.end());
        auto& table = out[i].table;
        for (const auto& cell : all) {
            if (!table.empty() && table.back().first == cell.first)
                table.back().second += cell.second;
            else
                table.push_back(cell);
        }
        out[i].total = 1ULL << N;
    }
    return out;
}

JointCounts enumerate(const LinearSystem& sys, const OracleOptions& opt) {
    return std::move(enumerate_views(sys, {W1 | W2 | Y1 | Y2}, opt).front());
}

// log2(num/den) when the ratio is an integer power of two.
std::optional<std::int64_t> exact_log2(u128 num, u128 den) {
    if (num >= den && num % den == 0) {
        const u128 r = num / den;
        if ((r & (r - 1)) == 0) {
            std::int64_t k = 0;
            for (u128 x = r; x > 1; x >>= 1) ++k;
            return k;
        }
    } else if (den > num && den % num == 0) {
        const u128 r = den / num;
        if ((r & (r - 1)) == 0) {
            std::int64_t k = 0;
            for (u128 x = r; x > 1; x >>= 1) ++k;
            return -k;
        }
    }
    return std::nullopt;
}

CountMap marginal(const JointCounts& c, VariableSet vars) {
    CountMap out;
    for (const auto& [key, count] : c.table) out[project(key, vars)] += count;
    return out;
}

void check_sets(VariableSet A, VariableSet B) {
    if (A == 0 || B == 0) throw DomainError("variable sets must be nonempty");
    if (A & B) throw DomainError("variable sets must be disjoint");
    if ((A | B) & ~15u) throw DomainError("unknown variable");
}

InfoValue add(const InfoValue& a, const InfoValue& b) {
    InfoValue out;
    out.bits = a.bits + b.bits;
    out.exactly_zero = a.exactly_zero && b.exactly_zero;
    if (a.exact && b.exact) out.exact = *a.exact + *b.exact;
    return out;
}

}  // namespace

JointCounts enumerate_system(const TransmitPlan& plan, const OracleOptions& opt) {
    std::vector<std::size_t> all(plan.slots.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    return enumerate(linearize(plan, all), opt);
}

JointCounts enumerate_slot(const TransmitPlan& plan, std::size_t slot, const OracleOptions& opt) {
    if (slot >= plan.slots.size()) throw DomainError("slot index out of range");
    return enumerate(linearize(plan, {slot}), opt);
}

InfoValue exact_mutual_information(const JointCounts& c, VariableSet A, VariableSet B) {
    check_sets(A, B);
    const CountMap ca = marginal(c, A), cb = marginal(c, B), cab = marginal(c, A | B);
    const u128 T = c.total;
    InfoValue out;
    // Independence holds iff every cell of the product of supports is present with
    // count(a,b) * total == count(a) * count(b).
    out.exactly_zero = cab.size() == ca.size() * cb.size();
    Rational exact = 0;
    bool exact_ok = true;
    double bits = 0.0;
    for (const auto& [key, n_ab] : cab) {
        const std::uint64_t n_a = ca.at(project(key, A));
        const std::uint64_t n_b = cb.at(project(key, B));
        const u128 num = static_cast<u128>(n_ab) * T;
        const u128 den = static_cast<u128>(n_a) * n_b;
        if (num != den) out.exactly_zero = false;
        bits += static_cast<double>(n_ab) / static_cast<double>(c.total) *
                std::log2(static_cast<double>(n_ab) * static_cast<double>(c.total) /
                          (static_cast<double>(n_a) * static_cast<double>(n_b)));
        if (auto k = exact_log2(num, den))
            exact += Rational(static_cast<std::int64_t>(n_ab), static_cast<std::int64_t>(c.total)) * *k;
        else
            exact_ok = false;
    }
    out.bits = out.exactly_zero ? 0.0 : bits;
    if (exact_ok) out.exact = out.exactly_zero ? Rational(0) : exact;
    return out;
}

InfoValue exact_conditional_entropy(const JointCounts& c, VariableSet A, VariableSet B) {
    check_sets(A, B);
    const CountMap cb = marginal(c, B), cab = marginal(c, A | B);
    InfoValue out;
    Rational exact = 0;
    bool exact_ok = true;
    double bits = 0.0;
    for (const auto& [key, n_ab] : cab) {
        const std::uint64_t n_b = cb.at(project(key, B));
        if (n_ab != n_b) out.exactly_zero = false;
        bits += static_cast<double>(n_ab) / static_cast<double>(c.total) *
                std::log2(static_cast<double>(n_b) / static_cast<double>(n_ab));
        if (auto k = exact_log2(n_b, n_ab))
            exact += Rational(static_cast<std::int64_t>(n_ab), static_cast<std::int64_t>(c.total)) * *k;
        else
            exact_ok = false;
    }
    out.bits = out.exactly_zero ? 0.0 : bits;
    if (exact_ok) out.exact = out.exactly_zero ? Rational(0) : exact;
    return out;
}

namespace {

// Sum of (c/M) log2(M/c) over a histogram with total M, as a float and, when every
// ratio is a power of two, exactly.
struct Entropy {
    double bits = 0.0;
    std::optional<Rational> exact = Rational(0);
};

Entropy entropy_of(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& hist, std::uint64_t M) {
    Entropy h;
    for (const auto& [key, c] : hist) {
        h.bits += static_cast<double>(c) / static_cast<double>(M) *
                  std::log2(static_cast<double>(M) / static_cast<double>(c));
        if (!h.exact) continue;
        if (auto k = exact_log2(M, c))
            *h.exact += Rational(static_cast<std::int64_t>(c), static_cast<std::int64_t>(M)) * *k;
        else
            h.exact.reset();
    }
    return h;
}

// I(W;Y1), I(W;Y2), H(W|Y1), H(W|Y2) for the data W of one user.
struct UserStatistics {
    InfoValue mi[2], equivocation[2];
};

// Exhaustive walk with the user's data bits as the outer loop: for every value w,
// all remaining symbols are enumerated and the histograms of Y1 and Y2 given w are
// tallied. Every w is equally likely, so
//   I(W;Y) = 0 exactly   iff all conditional histograms coincide, and
//   H(W|Y) = 0 exactly   iff their supports are pairwise disjoint;
// both are integer tests. The values follow from H(Y) - mean_w H(Y|W=w) and
// d + mean_w H(Y|W=w) - H(Y). Only histograms of Y are stored, never the much
// larger (W, Y) table.
UserStatistics user_statistics(const LinearSystem& sys, int user, const OracleOptions& opt) {
    const int N = sys.variables();
    if (N > opt.symbol_cap || N > 62)
        throw ResourceError("enumeration needs 2^" + std::to_string(N) + " realizations; cap is 2^" +
                            std::to_string(opt.symbol_cap));
    const int d = user == 1 ? sys.d1 : sys.d2;
    const int first = user == 1 ? 0 : sys.d1;  // index of the user's first data variable
    std::vector<int> inner;
    for (int k = 0; k < N; ++k)
        if (k < first || k >= first + d) inner.push_back(k);
    const std::uint64_t values = 1ULL << d;
    const std::uint64_t M = 1ULL << inner.size();

    struct PerValue {
        Entropy h[2];
        std::size_t support[2] = {0, 0};
        bool same_as_first[2] = {true, true};
    };
    std::vector<PerValue> per(values);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> reference[2];

    auto conditional = [&](std::uint64_t w, FlatCounter (&hist)[2]) {
        std::uint64_t y[2] = {0, 0};
        for (int b = 0; b < d; ++b)
            if ((w >> b) & 1ULL) {
                y[0] ^= sys.to_y1[first + b];
                y[1] ^= sys.to_y2[first + b];
            }
        hist[0].add(y[0]);
        hist[1].add(y[1]);
        for (std::uint64_t j = 1; j < M; ++j) {
            const int k = inner[std::countr_zero(j)];
            y[0] ^= sys.to_y1[k];
            y[1] ^= sys.to_y2[k];
            hist[0].add(y[0]);
            hist[1].add(y[1]);
        }
    };

    const int requested = opt.workers > 0 ? opt.workers : default_worker_count();
    const std::size_t workers = std::min<std::uint64_t>(static_cast<std::uint64_t>(requested), values);
    std::vector<FlatCounter> totals(2 * workers);  // per-worker histograms of Y1, Y2

    auto process = [&](std::uint64_t w, std::size_t worker) {
        FlatCounter hist[2];
        conditional(w, hist);
        for (int r = 0; r < 2; ++r) {
            const auto sorted = hist[r].sorted();
            per[w].h[r] = entropy_of(sorted, M);
            per[w].support[r] = sorted.size();
            if (w == 0)
                reference[r] = sorted;
            else
                per[w].same_as_first[r] = sorted == reference[r];
            for (const auto& [y, c] : sorted) totals[2 * worker + r].add(y, c);
        }
    };
    process(0, 0);  // the reference histograms are needed by every other value
    parallel_for(workers, static_cast<int>(workers), [&](std::size_t worker) {
        for (std::uint64_t w = worker == 0 ? workers : worker; w < values; w += workers) process(w, worker);
    });

    UserStatistics out;
    const std::uint64_t T = 1ULL << N;
    for (int r = 0; r < 2; ++r) {
        FlatCounter merged;
        for (std::size_t worker = 0; worker < workers; ++worker)
            totals[2 * worker + r].for_each([&](std::uint64_t y, std::uint64_t c) { merged.add(y, c); });
        const Entropy hy = entropy_of(merged.sorted(), T);

        // Mean conditional entropy over the equally likely values of w.
        double mean = 0.0;
        std::optional<Rational> mean_exact = Rational(0);
        bool independent = true;
        std::size_t supports = 0;
        for (const auto& p : per) {
            mean += p.h[r].bits;
            if (mean_exact && p.h[r].exact)
                *mean_exact += *p.h[r].exact;
            else
                mean_exact.reset();
            independent = independent && p.same_as_first[r];
            supports += p.support[r];
        }
        mean /= static_cast<double>(values);
        if (mean_exact) *mean_exact /= static_cast<std::int64_t>(values);

        InfoValue& mi = out.mi[r];
        mi.exactly_zero = independent;
        mi.bits = independent ? 0.0 : hy.bits - mean;
        if (independent)
            mi.exact = Rational(0);
        else if (hy.exact && mean_exact)
            mi.exact = *hy.exact - *mean_exact;

        InfoValue& eq = out.equivocation[r];
        eq.exactly_zero = supports == merged.size();
        eq.bits = eq.exactly_zero ? 0.0 : d + mean - hy.bits;
        if (eq.exactly_zero)
            eq.exact = Rational(0);
        else if (hy.exact && mean_exact)
            eq.exact = Rational(d) + *mean_exact - *hy.exact;
    }
    return out;
}

// Fills the four verdict quantities for the given slots, enumerated jointly.
void slot_quantities(const LinearSystem& sys, const OracleOptions& opt, InfoValue& i_w1_y2, InfoValue& i_w2_y1,
                     InfoValue& h_w1_y1, InfoValue& h_w2_y2) {
    const auto u1 = user_statistics(sys, 1, opt);
    const auto u2 = user_statistics(sys, 2, opt);
    i_w1_y2 = u1.mi[1];
    h_w1_y1 = u1.equivocation[0];
    i_w2_y1 = u2.mi[0];
    h_w2_y2 = u2.equivocation[1];
}

SecrecyReport analyze(const TransmitPlan& plan, const OracleOptions& opt) {
    SecrecyReport r;
    const std::size_t slot_count = plan.slots.size();
    r.slot_i_w1_y2.resize(slot_count);
    r.slot_i_w2_y1.resize(slot_count);
    r.slot_h_w1_given_y1.resize(slot_count);
    r.slot_h_w2_given_y2.resize(slot_count);
    for (std::size_t k = 0; k < slot_count; ++k) {
        r.symbol_count += static_cast<int>(plan.slots[k].symbols().size());
        slot_quantities(linearize(plan, {k}), opt, r.slot_i_w1_y2[k], r.slot_i_w2_y1[k],
                        r.slot_h_w1_given_y1[k], r.slot_h_w2_given_y2[k]);
    }
    if (slot_count == 1) {
        r.i_w1_y2 = r.slot_i_w1_y2[0];
        r.i_w2_y1 = r.slot_i_w2_y1[0];
        r.h_w1_given_y1 = r.slot_h_w1_given_y1[0];
        r.h_w2_given_y2 = r.slot_h_w2_given_y2[0];
    } else if (r.symbol_count <= opt.symbol_cap &&
               slot_count * static_cast<std::size_t>(plan.params.q()) <= 64) {
        std::vector<std::size_t> all(slot_count);
        for (std::size_t k = 0; k < slot_count; ++k) all[k] = k;
        slot_quantities(linearize(plan, all), opt, r.i_w1_y2, r.i_w2_y1, r.h_w1_given_y1, r.h_w2_given_y2);
    } else {
        // Slots share no symbols, so (W, Y) of different slots are independent and
        // the joint quantities are the per-slot sums.
        r.slot_factorized = true;
        const InfoValue zero{0.0, true, Rational(0)};
        r.i_w1_y2 = r.i_w2_y1 = r.h_w1_given_y1 = r.h_w2_given_y2 = zero;
        for (std::size_t k = 0; k < slot_count; ++k) {
            r.i_w1_y2 = add(r.i_w1_y2, r.slot_i_w1_y2[k]);
            r.i_w2_y1 = add(r.i_w2_y1, r.slot_i_w2_y1[k]);
            r.h_w1_given_y1 = add(r.h_w1_given_y1, r.slot_h_w1_given_y1[k]);
            r.h_w2_given_y2 = add(r.h_w2_given_y2, r.slot_h_w2_given_y2[k]);
        }
    }
    r.secure = r.i_w1_y2.exactly_zero && r.i_w2_y1.exactly_zero;
    r.decodable = r.h_w1_given_y1.exactly_zero && r.h_w2_given_y2.exactly_zero;
    return r;
}

}  // namespace

SecrecyReport verify_secrecy(const TransmitPlan& plan, const OracleOptions& opt) { return analyze(plan, opt); }

SecrecyReport verify_decodability(const TransmitPlan& plan, const OracleOptions& opt) { return analyze(plan, opt); }

Rational counted_rate(const TransmitPlan& plan) {
    const int d1 = plan.data_count(1), d2 = plan.data_count(2);
    if (d1 != d2)
        throw ConsistencyError("unequal data counts in a symmetric plan: " + std::to_string(d1) + " vs " +
                               std::to_string(d2));
    if (plan.slots.empty()) return 0;
    return Rational(d1, static_cast<std::int64_t>(plan.slots.size()));
}

}  // namespace secrecy_ldic
