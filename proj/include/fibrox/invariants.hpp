#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"

namespace fibrox {

/// Exact rank over the integers, by fraction-free (Bareiss) elimination.
/// Intermediate values are minors of the input; 128-bit arithmetic covers
/// every exponent matrix in this library's supported range.
inline int integer_matrix_rank(const std::vector<std::vector<long long>>& a) {
    if (a.empty())
        return 0;
    const size_t rows = a.size();
    const size_t cols = a.front().size();
    std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
    for (size_t r = 0; r < rows; ++r) {
        if (a[r].size() != cols)
            throw std::invalid_argument("ragged matrix");
        for (size_t c = 0; c < cols; ++c)
            m[r][c] = a[r][c];
    }

    const __int128 guard = static_cast<__int128>(1) << 110;
    __int128 prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        auto in_range = [&](__int128 v) { return v <= guard && v >= -guard; };
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                if (!in_range(m[r][c]) || !in_range(m[rank][col]) || !in_range(m[r][col]) ||
                    !in_range(m[rank][c]))
                    throw std::overflow_error("integer rank: entries exceed the supported range");
                m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Minimal generator count of I^2. All pairwise products share degree 2d,
/// so minimality is plain distinctness.
inline long long mu_square(const MonomialIdeal& ideal) {
    std::set<Monomial> products;
    const auto& gens = ideal.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i; j < gens.size(); ++j)
            products.insert(mul(gens[i], gens[j]));
    return static_cast<long long>(products.size());
}

/// Krull dimension of the fiber cone: for an equigenerated monomial ideal the
/// fiber cone is the semigroup ring on the generators, whose dimension is the
/// rank of the exponent matrix.
inline int analytic_spread(const MonomialIdeal& ideal) {
    std::vector<std::vector<long long>> rows;
    rows.reserve(static_cast<size_t>(ideal.generator_count()));
    for (const Monomial& g : ideal.generators())
        rows.emplace_back(g.exponents().begin(), g.exponents().end());
    return integer_matrix_rank(rows);
}

struct InvariantReport {
    int mu = 0;
    long long mu_square = 0;
    int spread = 0;
    long long freiman_rhs = 0; // l*mu - C(l,2)
    bool freiman = false;
};

/// Freiman test: mu(I^2) meets the lower bound l(I)*mu(I) - C(l(I), 2).
inline InvariantReport is_freiman(const MonomialIdeal& ideal) {
    InvariantReport r;
    r.mu = ideal.generator_count();
    r.mu_square = mu_square(ideal);
    r.spread = analytic_spread(ideal);
    r.freiman_rhs = static_cast<long long>(r.spread) * r.mu -
                    static_cast<long long>(r.spread) * (r.spread - 1) / 2;
    r.freiman = (r.mu_square == r.freiman_rhs);
    return r;
}

} // namespace fibrox
