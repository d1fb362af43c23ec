#pragma once

#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"
#include "fibrox/relations.hpp"

namespace fibrox {

// Brute-force side of the presentation-ideal computations. The defining
// ideal J of the fiber cone is never built symbolically; instead its graded
// pieces are inspected through fibers: all degree-k products of generator
// symbols sharing one image monomial. A relation set generates J up to
// degree D exactly when, for every k <= D, each degree-k fiber is connected
// by substitutions of relation sides through lower-degree multiples.

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ToricLimits {
    long long max_tmonomials = 2'000'000;
    int max_generators = 24;
    int max_check_degree = 10;
};

/// All degree-k products of generator symbols with one common image.
struct Fiber {
    Monomial image;
    std::vector<TMonomial> members; // ascending index-lex order
};

namespace detail {

inline void guard_fiber_enumeration(int q, int degree, const ToricLimits& limits) {
    if (q > limits.max_generators)
        throw ResourceLimitError("ideal has " + std::to_string(q) +
                                 " generators, above the cap of " +
                                 std::to_string(limits.max_generators));
    if (degree > limits.max_check_degree)
        throw ResourceLimitError("degree " + std::to_string(degree) + " is above the cap of " +
                                 std::to_string(limits.max_check_degree));
    long long count = binomial_coefficient(q + degree - 1, degree);
    if (count > limits.max_tmonomials)
        throw ResourceLimitError("degree-" + std::to_string(degree) + " fiber enumeration needs " +
                                 std::to_string(count) + " products, above the cap of " +
                                 std::to_string(limits.max_tmonomials));
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

/// Multiset inclusion on ascending index vectors.
inline bool submultiset(const std::vector<int>& part, const std::vector<int>& whole) {
    size_t i = 0, j = 0;
    while (i < part.size() && j < whole.size()) {
        if (part[i] == whole[j]) {
            ++i;
            ++j;
        } else if (part[i] > whole[j]) {
            ++j;
        } else {
            return false;
        }
    }
    return i == part.size();
}

/// whole - part + replacement, all ascending multisets.
inline std::vector<int> substitute(const std::vector<int>& whole, const std::vector<int>& part,
                                   const std::vector<int>& replacement) {
    std::vector<int> rest;
    rest.reserve(whole.size());
    size_t i = 0;
    for (int v : whole) {
        if (i < part.size() && part[i] == v)
            ++i;
        else
            rest.push_back(v);
    }
    std::vector<int> out(rest.size() + replacement.size());
    std::merge(rest.begin(), rest.end(), replacement.begin(), replacement.end(), out.begin());
    return out;
}

/// Connected components of a fiber under side substitutions of the moves.
inline int connect_fiber(const Fiber& fiber, std::span<const TRelation> moves, UnionFind& uf) {
    std::map<TMonomial, int> index;
    for (size_t i = 0; i < fiber.members.size(); ++i)
        index.emplace(fiber.members[i], static_cast<int>(i));
    for (size_t i = 0; i < fiber.members.size(); ++i) {
        const std::vector<int>& member = fiber.members[i].indices;
        for (const TRelation& move : moves) {
            if (move.lhs.indices.size() > member.size())
                continue;
            for (const TMonomial* side : {&move.lhs, &move.rhs}) {
                const TMonomial& other = (side == &move.lhs) ? move.rhs : move.lhs;
                if (!submultiset(side->indices, member))
                    continue;
                TMonomial target{substitute(member, side->indices, other.indices)};
                auto it = index.find(target);
                if (it != index.end())
                    uf.unite(static_cast<int>(i), it->second);
            }
        }
    }
    int components = 0;
    for (size_t i = 0; i < fiber.members.size(); ++i)
        if (uf.find(static_cast<int>(i)) == static_cast<int>(i))
            ++components;
    return components;
}

inline void validate_moves(const MonomialIdeal& ideal, std::span<const TRelation> moves) {
    for (const TRelation& move : moves) {
        for (int i : move.lhs.indices)
            if (i < 1 || i > ideal.generator_count())
                throw std::invalid_argument("move " + format_trelation(move) +
                                            " references a generator out of range");
        for (int i : move.rhs.indices)
            if (i < 1 || i > ideal.generator_count())
                throw std::invalid_argument("move " + format_trelation(move) +
                                            " references a generator out of range");
        if (!is_image_balanced(ideal, move))
            throw std::invalid_argument("move " + format_trelation(move) +
                                        " is not image-balanced");
    }
}

inline std::vector<TRelation> lift(std::span<const TBinomial> moves) {
    std::vector<TRelation> out;
    out.reserve(moves.size());
    for (const TBinomial& b : moves)
        out.push_back(to_relation(b));
    return out;
}

} // namespace detail

/// Complete partition of the degree-k products of generator symbols by
/// image, ordered by descending lex on the image.
inline std::vector<Fiber> fibers(const MonomialIdeal& ideal, int degree,
                                 const ToricLimits& limits = {}) {
    if (degree < 1)
        throw std::invalid_argument("fiber degree must be positive");
    const int q = ideal.generator_count();
    detail::guard_fiber_enumeration(q, degree, limits);

    std::map<Monomial, std::vector<TMonomial>, LexGreater> groups;
    std::vector<int> idx(static_cast<size_t>(degree), 1);
    while (true) {
        TMonomial t{idx};
        groups[image_of(ideal, t)].push_back(std::move(t));
        int pos = degree - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == q)
            --pos;
        if (pos < 0)
            break;
        const int next = idx[static_cast<size_t>(pos)] + 1;
        for (int i = pos; i < degree; ++i)
            idx[static_cast<size_t>(i)] = next;
    }

    std::vector<Fiber> out;
    out.reserve(groups.size());
    for (auto& [image, members] : groups)
        out.push_back(Fiber{image, std::move(members)});
    return out;
}

/// Degree-2 part of the presentation ideal: one canonical binomial per pair
/// of distinct degree-2 products with the same image.
inline std::vector<TBinomial> quadratic_kernel(const MonomialIdeal& ideal) {
    std::vector<TBinomial> out;
    for (const Fiber& fiber : fibers(ideal, 2)) {
        for (size_t i = 0; i < fiber.members.size(); ++i)
            for (size_t j = i + 1; j < fiber.members.size(); ++j)
                out.push_back(TBinomial::make(
                    {fiber.members[i].indices[0], fiber.members[i].indices[1]},
                    {fiber.members[j].indices[0], fiber.members[j].indices[1]}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct GenerationCheck {
    bool generated = true;
    int first_failing_degree = 0; // 0 when generated
};

/// True when the moves generate the presentation ideal through degree D:
/// every fiber of degree k <= D must be connected under the moves.
inline GenerationCheck generated_up_to(const MonomialIdeal& ideal,
                                       std::span<const TRelation> moves, int max_degree,
                                       const ToricLimits& limits = {}) {
    if (max_degree < 2)
        throw std::invalid_argument("generation check needs max degree >= 2");
    detail::validate_moves(ideal, moves);
    for (int k = 2; k <= max_degree; ++k)
        for (const Fiber& fiber : fibers(ideal, k, limits)) {
            detail::UnionFind uf(fiber.members.size());
            if (detail::connect_fiber(fiber, moves, uf) > 1)
                return {false, k};
        }
    return {true, 0};
}

inline GenerationCheck generated_up_to(const MonomialIdeal& ideal,
                                       std::span<const TBinomial> moves, int max_degree,
                                       const ToricLimits& limits = {}) {
    return generated_up_to(ideal, detail::lift(moves), max_degree, limits);
}

enum class ConnectorChoice { lex_smallest, lex_largest };

struct DegreeGeneration {
    int degree = 0;
    int new_generators = 0;          // fiber components minus one, summed
    std::vector<TRelation> connectors; // one chosen relation per missing link
};

struct GenerationReport {
    int max_degree = 0;
    std::vector<DegreeGeneration> by_degree; // degrees 2..max_degree
    bool quadratically_generated = true;     // no new generators above degree 2

    int count_at(int degree) const {
        for (const DegreeGeneration& g : by_degree)
            if (g.degree == degree)
                return g.new_generators;
        return 0;
    }
};

/// Incremental generation analysis: walk the degrees upward, count the fiber
/// components left disconnected by everything found so far, and patch each
/// gap with one connecting relation. The counts are independent of the
/// connector choice; the connectors themselves are not.
inline GenerationReport generation_degrees(const MonomialIdeal& ideal, int max_degree,
                                           const ToricLimits& limits = {},
                                           ConnectorChoice choice = ConnectorChoice::lex_smallest) {
    if (max_degree < 2)
        throw std::invalid_argument("generation analysis needs max degree >= 2");
    GenerationReport report;
    report.max_degree = max_degree;
    std::vector<TRelation> moves;
    for (int k = 2; k <= max_degree; ++k) {
        DegreeGeneration entry;
        entry.degree = k;
        for (const Fiber& fiber : fibers(ideal, k, limits)) {
            detail::UnionFind uf(fiber.members.size());
            if (detail::connect_fiber(fiber, moves, uf) <= 1)
                continue;
            // members are in ascending lex order, so the first member seen in
            // each component is its lex-smallest representative
            std::vector<int> reps;
            std::vector<char> seen(fiber.members.size(), 0);
            for (size_t i = 0; i < fiber.members.size(); ++i) {
                int root = uf.find(static_cast<int>(i));
                if (!seen[static_cast<size_t>(root)]) {
                    seen[static_cast<size_t>(root)] = 1;
                    reps.push_back(static_cast<int>(i));
                }
            }
            const size_t anchor = (choice == ConnectorChoice::lex_smallest)
                                      ? 0
                                      : reps.size() - 1;
            for (size_t r = 0; r < reps.size(); ++r) {
                if (r == anchor)
                    continue;
                entry.connectors.push_back(
                    TRelation::make(fiber.members[static_cast<size_t>(reps[anchor])],
                                    fiber.members[static_cast<size_t>(reps[r])]));
                ++entry.new_generators;
            }
        }
        moves.insert(moves.end(), entry.connectors.begin(), entry.connectors.end());
        if (k > 2 && entry.new_generators > 0)
            report.quadratically_generated = false;
        report.by_degree.push_back(std::move(entry));
    }
    return report;
}

} // namespace fibrox
