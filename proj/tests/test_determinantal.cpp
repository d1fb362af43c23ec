#include <random>

#include <doctest.h>

#include "fibrox/determinantal.hpp"
#include "fibrox/stable.hpp"
#include "fibrox/toric.hpp"

#include "support.hpp"

using namespace fibrox;
using testsupport::bivariate_ideal;
using testsupport::mono;

namespace {

std::vector<std::vector<int>> labels_of(const LabeledMatrix& m) {
    std::vector<std::vector<int>> out;
    for (int r = 0; r < m.rows(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.label(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

TEST_CASE("associate matrix of the Veronese example") {
    auto ideal = veronese_type(BoundVector::of({3, 2, 1}), 3, 3);

    auto full = build_associate_matrix(ideal, false);
    REQUIRE(full.rows() == 3);
    REQUIRE(full.cols() == 6);
    // full degree-3 grid: row i holds the x_i multiples of the degree-2 basis
    std::vector<std::vector<Monomial>> grid{
        {mono({3, 0, 0}), mono({2, 1, 0}), mono({2, 0, 1}), mono({1, 2, 0}), mono({1, 1, 1}),
         mono({1, 0, 2})},
        {mono({2, 1, 0}), mono({1, 2, 0}), mono({1, 1, 1}), mono({0, 3, 0}), mono({0, 2, 1}),
         mono({0, 1, 2})},
        {mono({2, 0, 1}), mono({1, 1, 1}), mono({1, 0, 2}), mono({0, 2, 1}), mono({0, 1, 2}),
         mono({0, 0, 3})}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c)
            CHECK(full.lattice(r, c) == grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);

    auto pruned = build_associate_matrix(ideal);
    REQUIRE(pruned.rows() == 3);
    REQUIRE(pruned.cols() == 5);
    CHECK(labels_of(pruned) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5}, {2, 4, 5, 0, 6}, {3, 5, 0, 6, 0}});
    for (int r = 0; r < pruned.rows(); ++r)
        for (int c = 0; c < pruned.cols(); ++c)
            if (int l = pruned.label(r, c); l != 0)
                CHECK(pruned.lattice(r, c) == ideal.generator(l));
}

TEST_CASE("minor set of the Veronese example") {
    auto ideal = veronese_type(BoundVector::of({3, 2, 1}), 3, 3);
    auto minors = binomial_two_minors(build_associate_matrix(ideal));
    // all seven fully labeled 2x2 determinants, including t1*t6 - t2*t5
    std::vector<TBinomial> expected{
        TBinomial::make({1, 4}, {2, 2}), TBinomial::make({1, 5}, {2, 3}),
        TBinomial::make({1, 6}, {2, 5}), TBinomial::make({1, 6}, {3, 4}),
        TBinomial::make({2, 5}, {3, 4}), TBinomial::make({2, 6}, {4, 5}),
        TBinomial::make({3, 6}, {5, 5})};
    std::sort(expected.begin(), expected.end());
    CHECK(minors == expected);
}

TEST_CASE("associate matrix in three variables with an isolated middle row") {
    auto ideal = minimalize(
        {mono({3, 0, 0}), mono({2, 0, 1}), mono({1, 0, 2}), mono({0, 3, 0}), mono({0, 0, 3})});

    auto full = build_associate_matrix(ideal, false);
    REQUIRE(full.rows() == 3);
    REQUIRE(full.cols() == 6);
    CHECK(labels_of(full) ==
          std::vector<std::vector<int>>{{1, 0, 2, 0, 0, 3}, {0, 0, 0, 4, 0, 0}, {2, 0, 3, 0, 0, 5}});

    auto pruned = build_associate_matrix(ideal);
    CHECK(pruned.cols() == 4);
    CHECK(labels_of(pruned) ==
          std::vector<std::vector<int>>{{1, 2, 0, 3}, {0, 0, 4, 0}, {2, 3, 0, 5}});

    std::vector<TBinomial> expected{TBinomial::make({1, 3}, {2, 2}),
                                    TBinomial::make({1, 5}, {2, 3}),
                                    TBinomial::make({2, 5}, {3, 3})};
    std::sort(expected.begin(), expected.end());
    CHECK(binomial_two_minors(pruned) == expected);
    CHECK(binomial_two_minors(full) == expected);
}

TEST_CASE("power ideals give a full grid") {
    for (auto [n, d] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}}) {
        auto ideal = minimalize(power_basis(n, d));
        auto m = build_associate_matrix(ideal);
        CHECK(m.cols() == binomial_coefficient(n + d - 2, d - 1));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                CHECK(m.label(r, c) != 0);
    }
}

TEST_CASE("bivariate matrix of the degree-5 example") {
    auto ideal = bivariate_ideal(5, {0, 2, 3, 4});

    auto assoc = build_associate_matrix(ideal);
    REQUIRE(assoc.rows() == 2);
    REQUIRE(assoc.cols() == 5);
    CHECK(labels_of(assoc) == std::vector<std::vector<int>>{{1, 0, 2, 3, 4}, {0, 2, 3, 4, 0}});
    CHECK(binomial_two_minors(assoc) == std::vector<TBinomial>{TBinomial::make({2, 4}, {3, 3})});

    auto hankel = build_bivariate_matrix(ideal);
    REQUIRE(hankel.rows() == 3);
    REQUIRE(hankel.cols() == 3);
    CHECK(hankel.strip_power() == 0);
    CHECK(hankel.row_span() == 2);
    CHECK(hankel.col_span() == 2);
    CHECK(labels_of(hankel) == std::vector<std::vector<int>>{{1, 0, 2}, {0, 2, 3}, {2, 3, 4}});
    std::vector<TBinomial> expected{TBinomial::make({1, 4}, {2, 2}),
                                    TBinomial::make({2, 4}, {3, 3})};
    std::sort(expected.begin(), expected.end());
    CHECK(binomial_two_minors(hankel) == expected);
}

TEST_CASE("bivariate matrix of the degree-12 example") {
    auto ideal = bivariate_ideal(12, {0, 3, 6, 9});
    auto m = build_bivariate_matrix(ideal);
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 7);
    CHECK(labels_of(m) == std::vector<std::vector<int>>{{1, 0, 0, 2, 0, 0, 3},
                                                        {0, 0, 2, 0, 0, 3, 0},
                                                        {0, 2, 0, 0, 3, 0, 0},
                                                        {2, 0, 0, 3, 0, 0, 4}});
    std::vector<TBinomial> expected{TBinomial::make({1, 3}, {2, 2}),
                                    TBinomial::make({1, 4}, {2, 3}),
                                    TBinomial::make({2, 4}, {3, 3})};
    std::sort(expected.begin(), expected.end());
    CHECK(binomial_two_minors(m) == expected);
}

TEST_CASE("bivariate construction divides out the common x2 power") {
    auto ideal = minimalize({mono({2, 3}), mono({1, 4})});
    auto m = build_bivariate_matrix(ideal);
    CHECK(m.strip_power() == 3);
    CHECK(m.row_span() == 1);
    CHECK(m.col_span() == 0);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    CHECK(m.lattice(0, 0) == mono({2, 0}));
    CHECK(m.lattice(1, 0) == mono({1, 1}));
    CHECK(m.label(0, 0) == 1);
    CHECK(m.label(1, 0) == 2);
    CHECK(binomial_two_minors(m).empty());
}

TEST_CASE("degenerate generator counts produce minor-free grids") {
    auto principal = minimalize({mono({0, 4})});
    auto m = build_bivariate_matrix(principal);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 1);
    CHECK(m.strip_power() == 4);
    CHECK(binomial_two_minors(m).empty());
    CHECK(quadratic_kernel(principal).empty());

    auto two = minimalize({mono({5, 0}), mono({3, 2})});
    auto m2 = build_bivariate_matrix(two);
    CHECK(m2.cols() == 1);
    CHECK(binomial_two_minors(m2).empty());
    CHECK(quadratic_kernel(two).empty());
    CHECK(generation_degrees(two, 6).quadratically_generated);
}

TEST_CASE("builders validate their inputs") {
    CHECK_THROWS_AS(build_associate_matrix(minimalize({mono({3})})), std::invalid_argument);
    CHECK_THROWS_AS(build_bivariate_matrix(minimalize({mono({1, 1, 1})})), std::invalid_argument);
}

TEST_CASE("pruning changes no minors") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> nd(2, 4), dd(2, 5);
    for (int trial = 0; trial < 40; ++trial) {
        auto ideal = testsupport::random_borel_instance(rng, nd(rng), dd(rng), 3);
        auto full = build_associate_matrix(ideal, false);
        auto pruned = build_associate_matrix(ideal);
        CHECK(binomial_two_minors(full) == binomial_two_minors(pruned));
    }
}

TEST_CASE("minors are image-balanced and lie inside the quadratic kernel") {
    std::mt19937 rng(72);
    std::uniform_int_distribution<int> nd(2, 4), dd(2, 5);
    for (int trial = 0; trial < 40; ++trial) {
        auto ideal = testsupport::random_borel_instance(rng, nd(rng), dd(rng), 3);
        auto kernel = quadratic_kernel(ideal);
        auto check = [&](const std::vector<TBinomial>& minors) {
            for (const auto& b : minors) {
                CHECK(is_image_balanced(ideal, b));
                CHECK(std::binary_search(kernel.begin(), kernel.end(), b));
            }
        };
        check(binomial_two_minors(build_associate_matrix(ideal)));
        if (ideal.vars() == 2)
            check(binomial_two_minors(build_bivariate_matrix(ideal)));
    }
}

TEST_CASE("hankel layout identity") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> dd(2, 7);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = dd(rng);
        std::vector<int> exps;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int e = 0; e <= d; ++e)
            if (coin(rng))
                exps.push_back(e);
        if (exps.empty())
            continue;
        auto m = build_bivariate_matrix(bivariate_ideal(d, exps));
        for (int r1 = 0; r1 < m.rows(); ++r1)
            for (int r2 = 0; r2 < m.rows(); ++r2)
                for (int c1 = 0; c1 < m.cols(); ++c1)
                    for (int c2 = 0; c2 < m.cols(); ++c2)
                        CHECK(mul(m.lattice(r1, c1), m.lattice(r2, c2)) ==
                              mul(m.lattice(r1, c2), m.lattice(r2, c1)));
    }
}

TEST_CASE("the associate matrix can miss kernel quadrics") {
    // Four generators whose only product collision pairs two disjoint
    // variable blocks; the collision is image-balanced but no 2x2 submatrix
    // realizes it, even though the presentation ideal is quadratic.
    auto ideal = minimalize(
        {mono({2, 0, 2, 0}), mono({2, 0, 0, 2}), mono({0, 2, 2, 0}), mono({0, 2, 0, 2})});
    auto kernel = quadratic_kernel(ideal);
    REQUIRE(kernel == std::vector<TBinomial>{TBinomial::make({1, 4}, {2, 3})});
    CHECK(binomial_two_minors(build_associate_matrix(ideal)).empty());
    CHECK(generation_degrees(ideal, 6).quadratically_generated);
    auto check = generated_up_to(ideal, std::span<const TBinomial>{}, 6);
    CHECK_FALSE(check.generated);
    CHECK(check.first_failing_degree == 2);
}

TEST_CASE("matrix rendering") {
    auto ideal = bivariate_ideal(5, {0, 2, 3, 4});
    CHECK(format_matrix(build_bivariate_matrix(ideal)) ==
          "[ t1  0 t2 ]\n[  0 t2 t3 ]\n[ t2 t3 t4 ]\n");
}
