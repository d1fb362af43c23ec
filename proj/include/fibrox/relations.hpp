#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibrox/ideal.hpp"

namespace fibrox {

// Relations in the presentation ring K[t_1..t_q] are pure differences of
// t-monomials. Generator symbols are ordered t_1 > t_2 > ... > t_q, so a
// product with the lexicographically smaller index multiset is the t-lex
// larger monomial.

/// Degree-2 binomial t_i t_j - t_k t_l between products of generator symbols.
/// Both sides are ascending index pairs; lhs is the t-lex larger product.
struct TBinomial {
    std::array<int, 2> lhs{};
    std::array<int, 2> rhs{};

    static TBinomial make(std::array<int, 2> a, std::array<int, 2> b) {
        if (a[0] > a[1])
            std::swap(a[0], a[1]);
        if (b[0] > b[1])
            std::swap(b[0], b[1]);
        if (a == b)
            throw std::invalid_argument("zero binomial: both products coincide");
        if (b < a)
            std::swap(a, b);
        return TBinomial{a, b};
    }

    friend bool operator==(const TBinomial&, const TBinomial&) = default;
    friend auto operator<=>(const TBinomial&, const TBinomial&) = default;
};

/// Degree-k monomial in the generator symbols: an ascending multiset of
/// 1-based generator indices.
struct TMonomial {
    std::vector<int> indices;

    static TMonomial of(std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        return TMonomial{std::move(idx)};
    }

    int degree() const { return static_cast<int>(indices.size()); }

    friend bool operator==(const TMonomial&, const TMonomial&) = default;
    friend auto operator<=>(const TMonomial&, const TMonomial&) = default;
};

/// Homogeneous pure-difference relation between two t-monomials of equal
/// degree; lhs is the index-lex smaller (t-lex larger) side.
struct TRelation {
    TMonomial lhs;
    TMonomial rhs;

    static TRelation make(TMonomial a, TMonomial b) {
        if (a.indices.size() != b.indices.size())
            throw std::invalid_argument("relation sides have different degrees");
        if (a == b)
            throw std::invalid_argument("zero relation: both sides coincide");
        if (b < a)
            std::swap(a, b);
        return TRelation{std::move(a), std::move(b)};
    }

    friend bool operator==(const TRelation&, const TRelation&) = default;
    friend auto operator<=>(const TRelation&, const TRelation&) = default;
};

inline TRelation to_relation(const TBinomial& b) {
    return TRelation{TMonomial{{b.lhs[0], b.lhs[1]}}, TMonomial{{b.rhs[0], b.rhs[1]}}};
}

/// Image of a t-monomial under t_i -> u_i.
inline Monomial image_of(const MonomialIdeal& ideal, const TMonomial& t) {
    Monomial m = Monomial::one(ideal.vars());
    for (int i : t.indices)
        m = mul(m, ideal.generator(i));
    return m;
}

inline Monomial image_of(const MonomialIdeal& ideal, const std::array<int, 2>& pair) {
    return mul(ideal.generator(pair[0]), ideal.generator(pair[1]));
}

inline bool is_image_balanced(const MonomialIdeal& ideal, const TBinomial& rel) {
    return image_of(ideal, rel.lhs) == image_of(ideal, rel.rhs);
}

inline bool is_image_balanced(const MonomialIdeal& ideal, const TRelation& rel) {
    return image_of(ideal, rel.lhs) == image_of(ideal, rel.rhs);
}

inline std::string format_tmonomial(const TMonomial& t) {
    std::string s;
    size_t i = 0;
    while (i < t.indices.size()) {
        size_t j = i;
        while (j < t.indices.size() && t.indices[j] == t.indices[i])
            ++j;
        if (!s.empty())
            s += '*';
        s += 't';
        s += std::to_string(t.indices[i]);
        if (j - i > 1) {
            s += '^';
            s += std::to_string(j - i);
        }
        i = j;
    }
    return s.empty() ? "1" : s;
}

inline std::string format_tbinomial(const TBinomial& b) {
    return format_tmonomial(TMonomial{{b.lhs[0], b.lhs[1]}}) + " - " +
           format_tmonomial(TMonomial{{b.rhs[0], b.rhs[1]}});
}

inline std::string format_trelation(const TRelation& r) {
    return format_tmonomial(r.lhs) + " - " + format_tmonomial(r.rhs);
}

} // namespace fibrox
