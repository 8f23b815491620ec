#ifndef WILF_CORE_HPP
#define WILF_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wilf/error.hpp"

namespace wilf {

/// One (part, multiplicity) pair of a partition written in product form.
struct Term {
    std::uint64_t part = 0;
    std::uint64_t multiplicity = 0;

    friend auto operator<=>(const Term&, const Term&) = default;
};

namespace detail {

// Largest r with r(r+1)(r+2)/6 <= n; shared with the bounds module.
inline std::uint64_t term_count_limit(std::uint64_t n) {
    std::uint64_t r = 0;
    while (true) {
        std::uint64_t s = r + 1;
        if (s * (s + 1) * (s + 2) / 6 > n) break;
        ++r;
    }
    return r;
}

} // namespace detail

/// A partition of `weight()` whose parts are pairwise distinct-in-value and
/// whose multiplicities are pairwise distinct. Terms are stored part-ascending;
/// instances are immutable once constructed.
class WilfPartition {
public:
    /// Normalizes and checks `terms` against `n`. Throws Error with code
    /// non_positive_entry, duplicate_part, duplicate_multiplicity or
    /// weight_mismatch naming the violated invariant.
    static WilfPartition validate(std::vector<Term> terms, std::uint64_t n) {
        if (terms.empty())
            throw Error(errc::non_positive_entry, "term list is empty");
        if (n == 0)
            throw Error(errc::non_positive_entry, "weight must be positive");
        for (const Term& t : terms) {
            if (t.part == 0)
                throw Error(errc::non_positive_entry,
                            "part must be positive");
            if (t.multiplicity == 0)
                throw Error(errc::non_positive_entry,
                            "multiplicity must be positive");
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.part < b.part; });
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i > 0 && terms[i].part == terms[i - 1].part)
                throw Error(errc::duplicate_part,
                            "part " + std::to_string(terms[i].part) +
                                " appears twice");
            sum += terms[i].part * terms[i].multiplicity;
        }
        std::vector<std::uint64_t> mults;
        mults.reserve(terms.size());
        for (const Term& t : terms) mults.push_back(t.multiplicity);
        std::sort(mults.begin(), mults.end());
        for (std::size_t i = 1; i < mults.size(); ++i)
            if (mults[i] == mults[i - 1])
                throw Error(errc::duplicate_multiplicity,
                            "multiplicity " + std::to_string(mults[i]) +
                                " appears twice");
        if (sum != n)
            throw Error(errc::weight_mismatch,
                        "terms sum to " + std::to_string(sum) + ", expected " +
                            std::to_string(n));
        return WilfPartition(std::move(terms), n);
    }

    /// Groups a descending list of parts into product form. Throws
    /// duplicate_multiplicity when two distinct parts repeat equally often.
    static WilfPartition from_plain_partition(
        const std::vector<std::uint64_t>& parts) {
        if (parts.empty())
            throw Error(errc::non_positive_entry, "partition is empty");
        std::vector<std::uint64_t> sorted = parts;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Term> terms;
        std::uint64_t weight = 0;
        for (std::size_t i = 0; i < sorted.size();) {
            if (sorted[i] == 0)
                throw Error(errc::non_positive_entry, "part must be positive");
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            terms.push_back({sorted[i], j - i});
            weight += sorted[i] * (j - i);
            i = j;
        }
        return validate(std::move(terms), weight);
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::uint64_t weight() const noexcept { return weight_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    friend bool operator==(const WilfPartition&, const WilfPartition&) = default;

private:
    WilfPartition(std::vector<Term> terms, std::uint64_t weight)
        : terms_(std::move(terms)), weight_(weight) {}

    std::vector<Term> terms_;
    std::uint64_t weight_;
};

/// Terms reordered by decreasing product multiplicity*part, ties broken by
/// decreasing multiplicity. A lossless reordering of a WilfPartition.
struct CanonicalForm {
    std::vector<Term> terms; // product-descending order

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonicalize(const WilfPartition& w) {
    CanonicalForm c{w.terms()};
    std::stable_sort(c.terms.begin(), c.terms.end(),
                     [](const Term& a, const Term& b) {
                         std::uint64_t pa = a.part * a.multiplicity;
                         std::uint64_t pb = b.part * b.multiplicity;
                         if (pa != pb) return pa > pb;
                         return a.multiplicity > b.multiplicity;
                     });
    return c;
}

/// Recovers the source partition from a canonical form.
inline WilfPartition decanonicalize(const CanonicalForm& c, std::uint64_t n) {
    return WilfPartition::validate(c.terms, n);
}

/// The parts/multiplicities swap. Always lands back inside the set of Wilf
/// partitions since both coordinates are pairwise distinct.
inline WilfPartition involution(const WilfPartition& w) {
    std::vector<Term> swapped;
    swapped.reserve(w.term_count());
    for (const Term& t : w.terms())
        swapped.push_back({t.multiplicity, t.part});
    return WilfPartition::validate(std::move(swapped), w.weight());
}

inline bool is_fixed_point(const WilfPartition& w) {
    return involution(w) == w;
}

} // namespace wilf

#endif // WILF_CORE_HPP
