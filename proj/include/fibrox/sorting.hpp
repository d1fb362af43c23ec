#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"
#include "fibrox/relations.hpp"

namespace fibrox {

// The sorting operator on pairs of equal-degree monomials: write the product
// u*v as x_{i1} x_{i2} ... x_{i2d} with weakly increasing indices; the first
// output collects the odd positions, the second the even positions. A pair is
// sorted when it is a fixed point, equivalently when the two index sequences
// interleave as i1 <= j1 <= i2 <= j2 <= ... <= id <= jd.

struct SortOutcome {
    Monomial first;  // odd-position merge, lex-largest of the two
    Monomial second; // even-position merge

    friend bool operator==(const SortOutcome&, const SortOutcome&) = default;
};

namespace detail {

inline void require_sortable_pair(const Monomial& u, const Monomial& v) {
    require_same_vars(u, v);
    if (u.degree() != v.degree())
        throw std::invalid_argument("sorting needs monomials of equal degree");
}

} // namespace detail

/// Splits counts per variable odd/even instead of materializing the merged
/// index sequence, so the cost is O(n) rather than O(d).
inline SortOutcome sort_pair(const Monomial& u, const Monomial& v) {
    detail::require_sortable_pair(u, v);
    const int n = u.vars();
    std::vector<int> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    int parity = 0; // positions consumed so far, mod 2
    for (int i = 0; i < n; ++i) {
        const int t = u.exponents()[static_cast<size_t>(i)] + v.exponents()[static_cast<size_t>(i)];
        const int to_first = (parity == 0) ? (t + 1) / 2 : t / 2;
        a[static_cast<size_t>(i)] = to_first;
        b[static_cast<size_t>(i)] = t - to_first;
        parity ^= (t & 1);
    }
    return SortOutcome{Monomial(std::move(a)), Monomial(std::move(b))};
}

/// Interleaving-chain test, computed on the expanded index sequences.
inline bool is_sorted_pair(const Monomial& u, const Monomial& v) {
    detail::require_sortable_pair(u, v);
    std::vector<int> iu, iv;
    iu.reserve(static_cast<size_t>(u.degree()));
    iv.reserve(static_cast<size_t>(v.degree()));
    for (int i = 1; i <= u.vars(); ++i) {
        iu.insert(iu.end(), static_cast<size_t>(u.exponent(i)), i);
        iv.insert(iv.end(), static_cast<size_t>(v.exponent(i)), i);
    }
    for (size_t k = 0; k < iu.size(); ++k) {
        if (iu[k] > iv[k])
            return false;
        if (k + 1 < iu.size() && iv[k] > iu[k + 1])
            return false;
    }
    return true;
}

struct SortabilityResult {
    bool sortable = true;
    // First generator pair whose sorting leaves the generating set.
    std::optional<std::pair<Monomial, Monomial>> witness;
};

/// A set is sortable when sorting any pair of its members stays inside it.
inline SortabilityResult is_sortable(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            SortOutcome s = sort_pair(gens[i], gens[j]);
            if (!ideal.contains_generator(s.first) || !ideal.contains_generator(s.second))
                return {false, std::make_pair(gens[i], gens[j])};
        }
    return {true, std::nullopt};
}

class NotSortableError : public std::invalid_argument {
public:
    NotSortableError(Monomial first, Monomial second)
        : std::invalid_argument("ideal is not sortable; witness pair (" + format_monomial(first) +
                                ", " + format_monomial(second) + ")"),
          witness_first(std::move(first)),
          witness_second(std::move(second)) {}

    Monomial witness_first;
    Monomial witness_second;
};

/// One canonical binomial t_u t_v - t_{u'} t_{v'} per unsorted generator pair
/// {u, v}, with (u', v') its sorting. Identities are dropped. Requires a
/// sortable ideal so that every sorting stays inside the generating set.
inline std::vector<TBinomial> unsorted_pair_relations(const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    std::vector<TBinomial> out;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            SortOutcome s = sort_pair(gens[i], gens[j]);
            if (s.first == gens[i] && s.second == gens[j])
                continue; // sorted pair
            auto a = ideal.index_of(s.first);
            auto b = ideal.index_of(s.second);
            if (!a || !b)
                throw NotSortableError(gens[i], gens[j]);
            out.push_back(TBinomial::make({static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                          {*a, *b}));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Rewrites the multiset until every pair is sorted; returns the factors in
/// descending lex order. The iteration cap is 10*k^2*d; exceeding it raises,
/// which no sortable input is expected to do.
inline std::vector<Monomial> sorting_normal_form(std::vector<Monomial> factors) {
    if (factors.empty())
        throw std::invalid_argument("sorting_normal_form needs at least one factor");
    const int d = factors.front().degree();
    for (const Monomial& f : factors) {
        detail::require_same_vars(factors.front(), f);
        if (f.degree() != d)
            throw std::invalid_argument("sorting_normal_form needs equal-degree factors");
    }
    const long long k = static_cast<long long>(factors.size());
    const long long cap = 10 * k * k * std::max(d, 1);
    long long steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < factors.size() && !changed; ++i)
            for (size_t j = i + 1; j < factors.size() && !changed; ++j) {
                SortOutcome s = sort_pair(factors[i], factors[j]);
                Monomial hi = std::max(factors[i], factors[j]);
                Monomial lo = std::min(factors[i], factors[j]);
                if (s.first == hi && s.second == lo)
                    continue;
                factors[i] = s.first;
                factors[j] = s.second;
                if (++steps > cap)
                    throw std::runtime_error("sorting rewrite exceeded its iteration cap");
                changed = true;
            }
    }
    std::sort(factors.begin(), factors.end(), LexGreater{});
    return factors;
}

} // namespace fibrox
