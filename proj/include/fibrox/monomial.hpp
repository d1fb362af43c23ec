#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibrox {

/// Monomial in a fixed number of variables, stored as its exponent vector.
/// Variables are indexed 1..n and x1 is the lex-largest variable.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0)
                throw std::invalid_argument("monomial exponent must be nonnegative");
    }

    static Monomial one(int vars) { return Monomial(std::vector<int>(static_cast<size_t>(vars), 0)); }

    static Monomial variable(int vars, int index) {
        if (index < 1 || index > vars)
            throw std::invalid_argument("variable index out of range");
        std::vector<int> e(static_cast<size_t>(vars), 0);
        e[static_cast<size_t>(index - 1)] = 1;
        return Monomial(std::move(e));
    }

    int vars() const { return static_cast<int>(exps_.size()); }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    /// Exponent of x_index, 1-based.
    int exponent(int index) const {
        if (index < 1 || index > vars())
            throw std::out_of_range("variable index out of range");
        return exps_[static_cast<size_t>(index - 1)];
    }

    const std::vector<int>& exponents() const { return exps_; }

    /// Largest variable index with nonzero exponent; 0 for the unit monomial.
    int max_var() const {
        for (int i = vars(); i >= 1; --i)
            if (exps_[static_cast<size_t>(i - 1)] > 0)
                return i;
        return 0;
    }

    bool is_unit() const { return degree() == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Lexicographic; meaningful for monomials with equal vars().
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exps_;
};

namespace detail {

inline void require_same_vars(const Monomial& u, const Monomial& v) {
    if (u.vars() != v.vars())
        throw std::invalid_argument("monomials live in different variable counts");
}

} // namespace detail

/// Total lexicographic order with x1 > x2 > ... > xn.
inline std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
    detail::require_same_vars(u, v);
    return u <=> v;
}

/// Comparator for descending-lex containers.
struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

inline Monomial mul(const Monomial& u, const Monomial& v) {
    detail::require_same_vars(u, v);
    std::vector<int> e(u.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] += v.exponents()[i];
    return Monomial(std::move(e));
}

/// Componentwise test u | v.
inline bool divides(const Monomial& u, const Monomial& v) {
    detail::require_same_vars(u, v);
    for (size_t i = 0; i < u.exponents().size(); ++i)
        if (u.exponents()[i] > v.exponents()[i])
            return false;
    return true;
}

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    detail::require_same_vars(u, v);
    std::vector<int> e(u.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(e[i], v.exponents()[i]);
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& u, const Monomial& v) {
    detail::require_same_vars(u, v);
    std::vector<int> e(u.exponents());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::min(e[i], v.exponents()[i]);
    return Monomial(std::move(e));
}

/// Binomial coefficient, saturating at LLONG_MAX on overflow.
inline long long binomial_coefficient(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    const __int128 cap = static_cast<__int128>(0x7fffffffffffffffLL);
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return 0x7fffffffffffffffLL;
    }
    return static_cast<long long>(r);
}

namespace detail {

inline void power_basis_rec(int vars, int pos, int remaining, std::vector<int>& cur,
                            std::vector<Monomial>& out) {
    if (pos == vars - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<size_t>(pos)] = e;
        power_basis_rec(vars, pos + 1, remaining - e, cur, out);
    }
}

} // namespace detail

/// All C(n+d-1, d) monomials of degree d in n variables, descending lex.
inline std::vector<Monomial> power_basis(int vars, int degree) {
    if (vars < 1)
        throw std::invalid_argument("power_basis needs at least one variable");
    if (degree < 0)
        throw std::invalid_argument("power_basis needs a nonnegative degree");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(binomial_coefficient(vars + degree - 1, degree)));
    std::vector<int> cur(static_cast<size_t>(vars), 0);
    detail::power_basis_rec(vars, 0, degree, cur, out);
    return out;
}

/// "x1^3*x2" style rendering; the unit monomial prints as "1".
inline std::string format_monomial(const Monomial& u) {
    std::string s;
    for (int i = 1; i <= u.vars(); ++i) {
        int e = u.exponent(i);
        if (e == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x';
        s += std::to_string(i);
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

} // namespace fibrox
