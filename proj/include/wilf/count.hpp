#ifndef WILF_COUNT_HPP
#define WILF_COUNT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "wilf/big.hpp"
#include "wilf/core.hpp"
#include "wilf/error.hpp"

namespace wilf {

/// Strictly increasing set of positive multiplicities.
using MultiplicitySet = std::vector<std::uint64_t>;

/// Dense table of p(n, r), the number of partitions of n into exactly r parts,
/// via p(n,r) = p(n-1,r-1) + p(n-r,r).
class PartitionCountTable {
public:
    PartitionCountTable(std::uint64_t max_n, std::uint64_t max_r)
        : max_n_(max_n), max_r_(max_r),
          table_((max_n + 1) * (max_r + 1), BigCount(0)) {
        cell(0, 0) = 1;
        for (std::uint64_t n = 1; n <= max_n; ++n)
            for (std::uint64_t r = 1; r <= max_r && r <= n; ++r) {
                cell(n, r) = cell(n - 1, r - 1);
                if (n >= r) cell(n, r) += cell(n - r, r);
            }
    }

    const BigCount& at(std::uint64_t n, std::uint64_t r) const {
        static const BigCount zero = 0;
        if (n > max_n_)
            throw Error(errc::domain_error, "n exceeds table ceiling");
        if (r > max_r_) return zero;
        return table_[n * (max_r_ + 1) + r];
    }

private:
    BigCount& cell(std::uint64_t n, std::uint64_t r) {
        return table_[n * (max_r_ + 1) + r];
    }

    std::uint64_t max_n_, max_r_;
    std::vector<BigCount> table_;
};

/// p(n, r) as a one-off computation.
inline BigCount p_exact(std::uint64_t n, std::uint64_t r) {
    if (n == 0 && r == 0) return 1;
    if (r == 0 || r > n) return 0;
    return PartitionCountTable(n, r).at(n, r);
}

/// Calls `visit` once per set partition of D (restricted-growth-string order)
/// with the block decomposition of D.
inline void set_partitions(
    const MultiplicitySet& D,
    const std::function<void(const std::vector<MultiplicitySet>&)>& visit) {
    const std::size_t k = D.size();
    if (k == 0) return;
    std::vector<std::size_t> rgs(k, 0);
    std::vector<MultiplicitySet> blocks;
    while (true) {
        std::size_t nblocks = 0;
        for (std::size_t i = 0; i < k; ++i)
            nblocks = std::max(nblocks, rgs[i] + 1);
        blocks.assign(nblocks, {});
        for (std::size_t i = 0; i < k; ++i) blocks[rgs[i]].push_back(D[i]);
        visit(blocks);
        // next restricted growth string
        std::size_t i = k;
        while (i-- > 1) {
            std::size_t prefix_max = 0;
            for (std::size_t j = 0; j < i; ++j)
                prefix_max = std::max(prefix_max, rgs[j]);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                for (std::size_t j = i + 1; j < k; ++j) rgs[j] = 0;
                break;
            }
        }
        if (i == 0 || i == static_cast<std::size_t>(-1)) break;
    }
}

namespace detail {

// Number of positive-integer solutions of sum(s_B * q_B) = n for the given
// block sums, by a dense table over 0..n extended block by block.
inline BigCount positive_solutions(const std::vector<std::uint64_t>& block_sums,
                                   std::uint64_t n) {
    std::vector<BigCount> table(n + 1, BigCount(0));
    table[0] = 1;
    for (std::uint64_t s : block_sums) {
        // next[v] = table[v-s] + next[v-s]: this block takes some q >= 1
        std::vector<BigCount> next(n + 1, BigCount(0));
        for (std::uint64_t v = s; v <= n; ++v)
            next[v] = table[v - s] + next[v - s];
        table.swap(next);
    }
    return table[n];
}

} // namespace detail

/// Number of injective assignments p : D -> positive integers with
/// sum(m * p(m)) = n, by inclusion-exclusion over set partitions of D.
inline BigCount N_injective(const MultiplicitySet& D, std::uint64_t n) {
    if (D.empty())
        throw Error(errc::domain_error, "multiplicity set is empty");
    BigCount total = 0;
    set_partitions(D, [&](const std::vector<MultiplicitySet>& blocks) {
        std::vector<std::uint64_t> sums;
        sums.reserve(blocks.size());
        BigCount coeff = 1;
        for (const auto& block : blocks) {
            std::uint64_t s = 0;
            for (std::uint64_t m : block) s += m;
            sums.push_back(s);
            coeff *= big_factorial(block.size() - 1);
        }
        bool negative = ((D.size() - blocks.size()) % 2) != 0;
        BigCount contribution = coeff * detail::positive_solutions(sums, n);
        if (negative)
            total -= contribution;
        else
            total += contribution;
    });
    return total;
}

namespace detail {

// Enumerates feasible multiplicity sets in descending construction order:
// a set {m_1 > m_2 > ...} is feasible iff sum(m_i * i) <= n.
inline void feasible_multiplicity_sets(
    std::uint64_t n,
    const std::function<void(const MultiplicitySet&)>& visit) {
    MultiplicitySet desc;
    std::function<void(std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t below, std::uint64_t min_weight) {
            std::uint64_t index = desc.size() + 1;
            for (std::uint64_t m = 1; m < below; ++m) {
                if (min_weight + m * index > n) break;
                desc.push_back(m);
                MultiplicitySet asc(desc.rbegin(), desc.rend());
                visit(asc);
                rec(m, min_weight + m * index);
                desc.pop_back();
            }
        };
    rec(n + 1, 0);
}

} // namespace detail

/// f(n) summed over feasible multiplicity sets; the independent counterpart of
/// the dp engine. Intended for n up to ~150 (Bell-number growth inside
/// N_injective). Throws resource_cap above `n_limit`.
inline std::map<std::uint64_t, BigCount> f_by_r(std::uint64_t n,
                                                std::uint64_t n_limit = 150) {
    if (n > n_limit)
        throw Error(errc::resource_cap,
                    "dual engine limited to n <= " + std::to_string(n_limit));
    std::map<std::uint64_t, BigCount> by_r;
    detail::feasible_multiplicity_sets(n, [&](const MultiplicitySet& D) {
        BigCount c = N_injective(D, n);
        if (c != 0) by_r[D.size()] += c;
    });
    return by_r;
}

inline BigCount f_dual(std::uint64_t n, std::uint64_t n_limit = 150) {
    if (n == 0) return 1;
    BigCount total = 0;
    for (const auto& [r, c] : f_by_r(n, n_limit)) total += c;
    return total;
}

namespace detail {

struct OverflowSignal {};

inline void checked_add(std::uint64_t& acc, std::uint64_t value) {
    if (__builtin_add_overflow(acc, value, &acc)) throw OverflowSignal{};
}
inline void checked_add(BigCount& acc, const BigCount& value) { acc += value; }

// Memo key: remaining, next part, then the used multiplicities still relevant
// at this state (m * part <= remaining). Zero-padded fixed array.
constexpr std::size_t kKeySlots = 16;
using MemoKey = std::array<std::uint16_t, kKeySlots>;

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : k) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Counts completions with parts >= p and multiplicities outside S summing to
// rem. States are independent of the original n, so one memo serves all n.
//
// The state space is split by how many multiplicities are still usable
// (those with m * p <= rem):
//   - 2p > rem: only (multiplicity 1, part rem) can finish; closed form.
//   - rem < kDenseRatio * p: at most kDenseRatio - 1 multiplicities usable,
//     so the surviving set is a small bitmask; these states live in a dense
//     direct-indexed table filled bottom-up, outside the memo cap.
//   - otherwise: hashed memoization on (rem, p, filtered set); this sparse
//     region is where the entry budget is spent.
template <class CountT>
class DpEngine {
public:
    static constexpr std::uint64_t kDenseRatio = 7;
    static constexpr std::uint64_t kMaskSize = 1ull << (kDenseRatio - 1);

    explicit DpEngine(std::uint64_t memo_cap) : memo_cap_(memo_cap) {}

    CountT count(std::uint64_t n) {
        if (n == 0) return CountT(1);
        if (term_count_limit(n) > kKeySlots - 2)
            throw Error(errc::resource_cap,
                        "n too large for the dp engine memo key");
        if (n > dense_ceiling_) build_dense(std::max(n, 2 * dense_ceiling_));
        return eval(n, 1, nullptr, 0);
    }

    std::size_t memo_entries() const { return memo_.size(); }

private:
    static bool contains(const std::uint16_t* s, std::size_t len,
                         std::uint64_t m) {
        for (std::size_t i = 0; i < len; ++i)
            if (s[i] == m) return true;
        return false;
    }

    // Smallest p stored densely for this rem (the largest with rem >= 7p is
    // hashed, the largest with 2p > rem is closed-form).
    static std::uint64_t dense_pmin(std::uint64_t rem) {
        return rem / kDenseRatio + 1;
    }
    static std::uint64_t dense_pmax(std::uint64_t rem) { return rem / 2; }

    std::uint64_t dense_index(std::uint64_t rem, std::uint64_t p,
                              std::uint64_t mask) const {
        return dense_offset_[rem] + (p - dense_pmin(rem)) * kMaskSize + mask;
    }

    // Value of a state from a mask-encoded set; (rem, p) must be at or past
    // the dense boundary: rem < kDenseRatio * p.
    CountT eval_masked(std::uint64_t rem, std::uint64_t p,
                       std::uint64_t mask) const {
        if (rem == 0) return CountT(1);
        if (2 * p > rem) return CountT((p <= rem && !(mask & 1)) ? 1 : 0);
        // refilter: keep multiplicities with m * p <= rem
        std::uint64_t usable = rem / p; // in [2, kDenseRatio - 1]
        mask &= (1ull << usable) - 1;
        return dense_[dense_index(rem, p, mask)];
    }

    void build_dense(std::uint64_t ceiling) {
        dense_ceiling_ = ceiling;
        dense_offset_.assign(ceiling + 2, 0);
        for (std::uint64_t rem = 0; rem <= ceiling; ++rem) {
            std::uint64_t span =
                dense_pmax(rem) >= dense_pmin(rem)
                    ? dense_pmax(rem) - dense_pmin(rem) + 1
                    : 0;
            dense_offset_[rem + 1] = dense_offset_[rem] + span * kMaskSize;
        }
        dense_.assign(dense_offset_[ceiling + 1], CountT(0));
        for (std::uint64_t rem = 2; rem <= ceiling; ++rem)
            for (std::uint64_t p = dense_pmax(rem); p >= dense_pmin(rem); --p) {
                std::uint64_t usable = rem / p;
                for (std::uint64_t mask = 0; mask < (1ull << usable); ++mask) {
                    CountT total = eval_masked(rem, p + 1, mask);
                    for (std::uint64_t m = 1; m <= usable; ++m) {
                        if (mask & (1ull << (m - 1))) continue;
                        checked_add(total,
                                    eval_masked(rem - m * p, p + 1,
                                                mask | (1ull << (m - 1))));
                    }
                    dense_[dense_index(rem, p, mask)] = total;
                }
            }
    }

    // Dispatcher for children reached from the hashed region.
    CountT eval(std::uint64_t rem, std::uint64_t p, const std::uint16_t* used,
                std::size_t n_used) {
        if (rem == 0) return CountT(1);
        if (p > rem) return CountT(0);
        if (2 * p > rem)
            return CountT(contains(used, n_used, 1) ? 0 : 1);
        if (rem < kDenseRatio * p) {
            std::uint64_t usable = rem / p;
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < n_used; ++i)
                if (used[i] <= usable) mask |= 1ull << (used[i] - 1);
            return dense_[dense_index(rem, p, mask)];
        }
        return rec(rem, p, used, n_used);
    }

    CountT rec(std::uint64_t rem, std::uint64_t p, const std::uint16_t* used,
               std::size_t n_used) {
        MemoKey key{};
        key[0] = static_cast<std::uint16_t>(rem);
        key[1] = static_cast<std::uint16_t>(p);
        std::uint16_t relevant[kKeySlots];
        std::size_t n_rel = 0;
        for (std::size_t i = 0; i < n_used; ++i)
            if (static_cast<std::uint64_t>(used[i]) * p <= rem) {
                relevant[n_rel] = used[i];
                key[2 + n_rel] = used[i];
                ++n_rel;
            }
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        CountT total = eval(rem, p + 1, relevant, n_rel);
        for (std::uint64_t m = 1; m * p <= rem; ++m) {
            if (contains(relevant, n_rel, m)) continue;
            std::uint16_t next_used[kKeySlots];
            std::size_t i = 0;
            while (i < n_rel && relevant[i] < m) {
                next_used[i] = relevant[i];
                ++i;
            }
            next_used[i] = static_cast<std::uint16_t>(m);
            for (; i < n_rel; ++i) next_used[i + 1] = relevant[i];
            checked_add(total, eval(rem - m * p, p + 1, next_used, n_rel + 1));
        }
        if (memo_.size() >= memo_cap_)
            throw Error(errc::resource_cap,
                        "dp memo exceeded " + std::to_string(memo_cap_) +
                            " entries");
        memo_.emplace(key, total);
        return total;
    }

    std::uint64_t memo_cap_;
    std::uint64_t dense_ceiling_ = 0;
    std::vector<std::uint64_t> dense_offset_;
    std::vector<CountT> dense_;
    std::unordered_map<MemoKey, CountT, MemoKeyHash> memo_;
};

} // namespace detail

/// Memoized counter for f(n) = |T(n)|. The memo persists across calls, so
/// evaluating a whole range costs little more than its largest member. Runs
/// in native 64-bit arithmetic and transparently falls back to BigCount when
/// a count would overflow. Not shareable across threads; use one instance
/// per worker.
class FCounter {
public:
    static constexpr std::uint64_t kDefaultMemoCap = 1ull << 26;

    explicit FCounter(std::uint64_t memo_cap = kDefaultMemoCap)
        : memo_cap_(memo_cap), fast_(memo_cap) {}

    BigCount operator()(std::uint64_t n) {
        if (!wide_) {
            try {
                return BigCount(fast_.count(n));
            } catch (const detail::OverflowSignal&) {
                wide_ = std::make_unique<detail::DpEngine<BigCount>>(memo_cap_);
            }
        }
        return wide_->count(n);
    }

    std::size_t memo_entries() const {
        return wide_ ? wide_->memo_entries() : fast_.memo_entries();
    }

private:
    std::uint64_t memo_cap_;
    detail::DpEngine<std::uint64_t> fast_;
    std::unique_ptr<detail::DpEngine<BigCount>> wide_;
};

/// f(n) as a one-off computation (fresh memo each call).
inline BigCount f_dp(std::uint64_t n,
                     std::uint64_t memo_cap = FCounter::kDefaultMemoCap) {
    FCounter counter(memo_cap);
    return counter(n);
}

} // namespace wilf

#endif // WILF_COUNT_HPP
