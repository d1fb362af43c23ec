#pragma once

#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"

namespace fibrox {

/// Per-variable exponent caps c = (c_1, ..., c_n); an absent entry means the
/// variable is unconstrained. The all-unbounded value encodes the classical
/// (unrestricted) strongly stable case.
class BoundVector {
public:
    explicit BoundVector(std::vector<std::optional<int>> bounds) : bounds_(std::move(bounds)) {
        for (const auto& b : bounds_)
            if (b && *b < 0)
                throw std::invalid_argument("bounds must be nonnegative");
    }

    static BoundVector unbounded(int vars) {
        return BoundVector(std::vector<std::optional<int>>(static_cast<size_t>(vars), std::nullopt));
    }

    static BoundVector of(std::vector<int> bounds) {
        std::vector<std::optional<int>> b(bounds.begin(), bounds.end());
        return BoundVector(std::move(b));
    }

    int vars() const { return static_cast<int>(bounds_.size()); }

    std::optional<int> bound(int index) const {
        if (index < 1 || index > vars())
            throw std::out_of_range("bound index out of range");
        return bounds_[static_cast<size_t>(index - 1)];
    }

    bool all_unbounded() const {
        for (const auto& b : bounds_)
            if (b)
                return false;
        return true;
    }

private:
    std::vector<std::optional<int>> bounds_;
};

inline bool is_c_bounded(const Monomial& u, const BoundVector& c) {
    if (u.vars() != c.vars())
        throw std::invalid_argument("bound vector has wrong variable count");
    for (int i = 1; i <= u.vars(); ++i) {
        auto b = c.bound(i);
        if (b && u.exponent(i) > *b)
            return false;
    }
    return true;
}

namespace detail {

/// x_to * u / x_from; requires x_from | u and to != from.
inline Monomial exchange(const Monomial& u, int to, int from) {
    std::vector<int> e(u.exponents());
    e[static_cast<size_t>(from - 1)] -= 1;
    e[static_cast<size_t>(to - 1)] += 1;
    return Monomial(std::move(e));
}

inline void require_bounded_generators(const MonomialIdeal& ideal, const BoundVector& c) {
    for (const Monomial& g : ideal.generators())
        if (!is_c_bounded(g, c))
            throw std::invalid_argument("generator " + format_monomial(g) +
                                        " violates the bound vector");
}

} // namespace detail

struct StabilityWitness {
    Monomial generator; // the u whose exchange x_i u / x_j escapes the ideal
    int to_var = 0;     // i
    int from_var = 0;   // j
};

struct StabilityResult {
    bool holds = true;
    std::optional<StabilityWitness> witness;
};

/// c-bounded strongly stable: for every generator u and i < j with x_j | u,
/// if x_i u / x_j respects the bounds it must again lie in the ideal.
/// Membership reduces to membership in the generating set because all
/// monomials involved share one degree.
inline StabilityResult is_strongly_stable(const MonomialIdeal& ideal, const BoundVector& c) {
    detail::require_bounded_generators(ideal, c);
    for (const Monomial& u : ideal.generators())
        for (int j = 1; j <= ideal.vars(); ++j) {
            if (u.exponent(j) == 0)
                continue;
            for (int i = 1; i < j; ++i) {
                Monomial w = detail::exchange(u, i, j);
                if (is_c_bounded(w, c) && !ideal.contains_generator(w))
                    return {false, StabilityWitness{u, i, j}};
            }
        }
    return {true, std::nullopt};
}

/// c-bounded stable: only exchanges out of the largest variable m(u) are
/// required to stay inside the ideal.
inline StabilityResult is_stable(const MonomialIdeal& ideal, const BoundVector& c) {
    detail::require_bounded_generators(ideal, c);
    for (const Monomial& u : ideal.generators()) {
        const int j = u.max_var();
        for (int i = 1; i < j; ++i) {
            Monomial w = detail::exchange(u, i, j);
            if (is_c_bounded(w, c) && !ideal.contains_generator(w))
                return {false, StabilityWitness{u, i, j}};
        }
    }
    return {true, std::nullopt};
}

/// Smallest c-bounded strongly stable ideal containing the seeds: breadth-
/// first closure under all bound-respecting exchanges x_i u / x_j with i < j.
inline MonomialIdeal borel_closure(const std::vector<Monomial>& seeds, const BoundVector& c) {
    if (seeds.empty())
        throw std::invalid_argument("borel_closure needs at least one seed");
    const int n = seeds.front().vars();
    const int d = seeds.front().degree();
    for (const Monomial& s : seeds) {
        if (s.vars() != n)
            throw std::invalid_argument("seeds live in different variable counts");
        if (s.degree() != d)
            throw std::invalid_argument("seeds must be equigenerated");
        if (!is_c_bounded(s, c))
            throw std::invalid_argument("seed " + format_monomial(s) +
                                        " violates the bound vector");
    }

    std::set<Monomial, LexGreater> seen(seeds.begin(), seeds.end());
    std::deque<Monomial> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Monomial u = std::move(queue.front());
        queue.pop_front();
        for (int j = 1; j <= n; ++j) {
            if (u.exponent(j) == 0)
                continue;
            for (int i = 1; i < j; ++i) {
                Monomial w = detail::exchange(u, i, j);
                if (is_c_bounded(w, c) && seen.insert(w).second)
                    queue.push_back(w);
            }
        }
    }
    return MonomialIdeal(n, std::vector<Monomial>(seen.begin(), seen.end()));
}

/// All degree-d monomials whose exponent vector stays below the (weakly
/// decreasing) bound vector a.
inline MonomialIdeal veronese_type(const BoundVector& bounds, int vars, int degree) {
    if (bounds.vars() != vars)
        throw std::invalid_argument("bound vector has wrong variable count");
    long long total = 0;
    for (int i = 1; i <= vars; ++i) {
        auto b = bounds.bound(i);
        if (!b)
            throw std::invalid_argument("veronese_type needs finite bounds");
        if (i > 1 && *bounds.bound(i - 1) < *b)
            throw std::invalid_argument("veronese_type needs weakly decreasing bounds");
        total += *b;
    }
    if (total < degree)
        throw std::invalid_argument("bounds sum below the degree: the ideal is empty");

    std::vector<Monomial> gens;
    for (Monomial& m : power_basis(vars, degree))
        if (is_c_bounded(m, bounds))
            gens.push_back(std::move(m));
    return MonomialIdeal(vars, std::move(gens));
}

} // namespace fibrox
