#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibrox/monomial.hpp"

namespace fibrox {

/// Equigenerated monomial ideal given by its minimal generating set.
/// Generators are pairwise distinct, all of one degree, and stored in
/// strictly descending lex order; they are referred to by 1-based index.
class MonomialIdeal {
public:
    /// Normalizes the input: drops monomials strictly divisible by another,
    /// deduplicates, sorts descending. Throws if the surviving set is empty,
    /// mixes variable counts, or is not generated in a single degree.
    MonomialIdeal(int vars, std::vector<Monomial> generators) : vars_(vars) {
        if (vars < 1)
            throw std::invalid_argument("ideal needs at least one variable");
        if (generators.empty())
            throw std::invalid_argument("ideal needs at least one generator");
        for (const Monomial& g : generators)
            if (g.vars() != vars)
                throw std::invalid_argument("generator has wrong variable count");

        std::sort(generators.begin(), generators.end(), LexGreater{});
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

        for (const Monomial& g : generators) {
            bool redundant = false;
            for (const Monomial& h : generators)
                if (h != g && divides(h, g)) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                gens_.push_back(g);
        }

        degree_ = gens_.front().degree();
        for (const Monomial& g : gens_)
            if (g.degree() != degree_)
                throw std::invalid_argument(
                    "unsupported input: minimal generators are not equigenerated");
    }

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    const std::vector<Monomial>& generators() const { return gens_; }

    /// 1-based access, matching the u_1 > ... > u_q indexing.
    const Monomial& generator(int index) const {
        if (index < 1 || index > generator_count())
            throw std::out_of_range("generator index out of range");
        return gens_[static_cast<size_t>(index - 1)];
    }

    /// 1-based index of a monomial in the generating set, if present.
    std::optional<int> index_of(const Monomial& m) const {
        auto it = std::lower_bound(gens_.begin(), gens_.end(), m, LexGreater{});
        if (it != gens_.end() && *it == m)
            return static_cast<int>(it - gens_.begin()) + 1;
        return std::nullopt;
    }

    bool contains_generator(const Monomial& m) const { return index_of(m).has_value(); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int vars_ = 0;
    int degree_ = 0;
    std::vector<Monomial> gens_;
};

/// Minimal generating set of the ideal spanned by the given monomials.
inline MonomialIdeal minimalize(std::vector<Monomial> monomials) {
    if (monomials.empty())
        throw std::invalid_argument("minimalize needs at least one monomial");
    const int vars = monomials.front().vars();
    return MonomialIdeal(vars, std::move(monomials));
}

} // namespace fibrox
