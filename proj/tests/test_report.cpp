#include <doctest.h>

#include "fibrox/report.hpp"

#include "support.hpp"

using namespace fibrox;
using testsupport::bivariate_ideal;

TEST_CASE("verification of the Veronese example") {
    auto ideal = testsupport::load_data_ideal("veronese_321_d3.ideal");
    auto report = verify_ideal(ideal, {}, "veronese");

    CHECK(report.sortable.sortable);
    CHECK(report.kind == MatrixKind::associate);
    CHECK(report.primary->matrix.rows() == 3);
    CHECK(report.primary->matrix.cols() == 5);
    CHECK(report.minors_equal_kernel);
    CHECK(report.generation.quadratically_generated);
    CHECK(report.sortable_minors_generate.applicable);
    CHECK(report.sortable_minors_generate.holds == true);
    CHECK(report.associate_minors_generate.applicable);
    CHECK(report.associate_minors_generate.holds == true);
    CHECK_FALSE(report.bivariate_minors_generate.applicable);
    CHECK(report.all_applicable_hold());
    CHECK(report.invariants.mu == 6);
}

TEST_CASE("verification of the degree-5 two-variable example") {
    auto ideal = bivariate_ideal(5, {0, 2, 3, 4});
    VerifyOptions opts;
    opts.also_associate = true;
    auto report = verify_ideal(ideal, opts, "deg5");

    CHECK_FALSE(report.sortable.sortable);
    CHECK(report.kind == MatrixKind::bivariate);
    CHECK(report.primary->minors.size() == 2);
    CHECK(report.minors_equal_kernel);
    REQUIRE(report.associate_extra.has_value());
    CHECK(report.associate_extra->minors.size() == 1);
    CHECK_FALSE(report.sortable_minors_generate.applicable);
    CHECK(report.bivariate_minors_generate.applicable);
    CHECK(report.bivariate_minors_generate.holds == true);
    CHECK(report.all_applicable_hold());
}

TEST_CASE("stability verdicts appear when bounds are supplied") {
    auto ideal = testsupport::load_data_ideal("stable_not_sortable.ideal");
    VerifyOptions opts;
    opts.bounds = BoundVector::of({3, 2, 1});
    auto report = verify_ideal(ideal, opts, "stable-only");
    REQUIRE(report.stable.has_value());
    REQUIRE(report.strongly_stable.has_value());
    CHECK(report.stable->holds);
    CHECK_FALSE(report.strongly_stable->holds);

    auto j = report_to_json(report);
    CHECK(j.contains("stability"));
    CHECK(j["stability"]["stable"]["holds"] == true);
    CHECK(j["stability"]["strongly_stable"]["holds"] == false);
}

TEST_CASE("reports are deterministic and carry the pinned schema") {
    auto ideal = testsupport::load_data_ideal("veronese_321_d3.ideal");
    auto once = report_to_json(verify_ideal(ideal, {}, "v")).dump(2);
    auto twice = report_to_json(verify_ideal(ideal, {}, "v")).dump(2);
    CHECK(once == twice);

    auto j = report_to_json(verify_ideal(ideal, {}, "v"));
    for (const char* key : {"input", "sortable", "matrix", "minors", "quadratic_kernel",
                            "generation", "theorems", "invariants"})
        CHECK(j.contains(key));
    CHECK(j["minors"][0] == json({{"lhs", {1, 4}}, {"rhs", {2, 2}}}));
    CHECK(j["input"]["generators"][0] == json::array({3, 0, 0}));
    CHECK(j["invariants"]["mu"] == 6);

    auto text_once = report_to_text(verify_ideal(ideal, {}, "v"));
    auto text_twice = report_to_text(verify_ideal(ideal, {}, "v"));
    CHECK(text_once == text_twice);
}

TEST_CASE("verification rejects a single variable") {
    CHECK_THROWS_AS(verify_ideal(minimalize({testsupport::mono({3})}), {}, "x"),
                    std::invalid_argument);
}
