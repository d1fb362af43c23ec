#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fibrox/ideal.hpp"
#include "fibrox/io.hpp"
#include "fibrox/monomial.hpp"
#include "fibrox/stable.hpp"

namespace testsupport {

inline fibrox::Monomial mono(std::vector<int> exps) { return fibrox::Monomial(std::move(exps)); }

inline fibrox::MonomialIdeal ideal_of(std::vector<fibrox::Monomial> gens) {
    return fibrox::minimalize(std::move(gens));
}

/// Two-variable equigenerated ideal from its x2-exponents.
inline fibrox::MonomialIdeal bivariate_ideal(int degree, const std::vector<int>& x2exps) {
    std::vector<fibrox::Monomial> gens;
    gens.reserve(x2exps.size());
    for (int e : x2exps)
        gens.push_back(mono({degree - e, e}));
    return fibrox::minimalize(std::move(gens));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(static_cast<bool>(in), "cannot open " << path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline fibrox::MonomialIdeal load_data_ideal(const std::string& name) {
    std::string path = std::string(FIBROX_DATA_DIR) + "/" + name;
    return fibrox::parse_ideal(read_file(path), path);
}

/// Seeded strongly stable instance with at most 12 generators: seeds from
/// the degree-d basis, closed under exchanges below a random bound vector
/// that admits every seed. Principal closures (the default) are additionally
/// sortable; closures of several seeds need not be, so tests of sortable-set
/// behavior stay at max_seeds = 1.
inline fibrox::MonomialIdeal random_borel_instance(std::mt19937& rng, int vars, int degree,
                                                   int max_seeds = 1) {
    const auto basis = fibrox::power_basis(vars, degree);
    std::uniform_int_distribution<int> seed_count(1, max_seeds);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    while (true) {
        std::vector<fibrox::Monomial> seeds;
        const int k = seed_count(rng);
        for (int i = 0; i < k; ++i)
            seeds.push_back(basis[pick(rng)]);

        std::vector<int> bounds(static_cast<size_t>(vars), 0);
        for (int v = 1; v <= vars; ++v) {
            int least = 0;
            for (const auto& s : seeds)
                least = std::max(least, s.exponent(v));
            std::uniform_int_distribution<int> extra(least, degree);
            bounds[static_cast<size_t>(v - 1)] = extra(rng);
        }
        auto closure = fibrox::borel_closure(seeds, fibrox::BoundVector::of(bounds));
        if (closure.generator_count() <= 12)
            return closure;
    }
}

} // namespace testsupport
