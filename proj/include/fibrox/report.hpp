#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrox/determinantal.hpp"
#include "fibrox/ideal.hpp"
#include "fibrox/invariants.hpp"
#include "fibrox/io.hpp"
#include "fibrox/sorting.hpp"
#include "fibrox/stable.hpp"
#include "fibrox/toric.hpp"

namespace fibrox {

struct VerifyOptions {
    int max_degree = 6;
    bool also_associate = false; // on n = 2, additionally report the associate kind
    std::optional<BoundVector> bounds;
    ToricLimits limits;
};

struct TheoremVerdict {
    bool applicable = false;
    std::optional<bool> holds; // set when applicable
};

struct MatrixSection {
    LabeledMatrix matrix;
    std::vector<TBinomial> minors;
};

struct VerificationReport {
    VerificationReport(MonomialIdeal in, std::string src)
        : input(std::move(in)), source(std::move(src)) {}

    MonomialIdeal input;
    std::string source;
    int max_degree = 0;

    SortabilityResult sortable;
    std::optional<StabilityResult> stable;
    std::optional<StabilityResult> strongly_stable;

    MatrixKind kind = MatrixKind::associate;
    std::optional<MatrixSection> primary;
    std::optional<MatrixSection> associate_extra; // n = 2 with also_associate

    std::vector<TBinomial> kernel;
    bool minors_equal_kernel = false;

    GenerationReport generation;

    // Generation checks behind the three determinantal statements:
    //   sortable ideals (associate matrix, any n >= 2),
    //   two-variable ideals with quadratically generated presentation (Hankel),
    //   n >= 3 ideals with quadratically generated presentation (associate).
    TheoremVerdict sortable_minors_generate;
    TheoremVerdict bivariate_minors_generate;
    TheoremVerdict associate_minors_generate;

    InvariantReport invariants;

    bool all_applicable_hold() const {
        for (const TheoremVerdict* v :
             {&sortable_minors_generate, &bivariate_minors_generate, &associate_minors_generate})
            if (v->applicable && v->holds && !*v->holds)
                return false;
        return true;
    }
};

inline VerificationReport verify_ideal(const MonomialIdeal& ideal, const VerifyOptions& opts = {},
                                       std::string source = "<input>") {
    if (ideal.vars() < 2)
        throw std::invalid_argument("verification needs at least two variables");

    VerificationReport r{ideal, std::move(source)};
    r.max_degree = opts.max_degree;
    r.sortable = is_sortable(ideal);
    r.generation = generation_degrees(ideal, opts.max_degree, opts.limits);
    r.invariants = is_freiman(ideal);
    if (opts.bounds) {
        r.stable = is_stable(ideal, *opts.bounds);
        r.strongly_stable = is_strongly_stable(ideal, *opts.bounds);
    }

    const int n = ideal.vars();
    r.kind = (n == 2) ? MatrixKind::bivariate : MatrixKind::associate;
    LabeledMatrix primary = (n == 2) ? build_bivariate_matrix(ideal) : build_associate_matrix(ideal);
    r.primary = MatrixSection{primary, binomial_two_minors(primary)};

    // The associate construction exists for every n >= 2; for n = 2 it backs
    // the sortable-ideal check and the optional secondary report section.
    std::vector<TBinomial> associate_minors;
    if (n == 2) {
        LabeledMatrix assoc = build_associate_matrix(ideal);
        associate_minors = binomial_two_minors(assoc);
        if (opts.also_associate)
            r.associate_extra = MatrixSection{std::move(assoc), associate_minors};
    } else {
        associate_minors = r.primary->minors;
    }

    r.kernel = quadratic_kernel(ideal);
    r.minors_equal_kernel = (r.primary->minors == r.kernel);

    if (r.sortable.sortable) {
        r.sortable_minors_generate.applicable = true;
        r.sortable_minors_generate.holds =
            generated_up_to(ideal, std::span<const TBinomial>(associate_minors), opts.max_degree,
                            opts.limits)
                .generated;
    }
    const bool quadratic = r.generation.quadratically_generated;
    if (n == 2) {
        r.bivariate_minors_generate.applicable = quadratic;
        if (quadratic)
            r.bivariate_minors_generate.holds =
                generated_up_to(ideal, std::span<const TBinomial>(r.primary->minors),
                                opts.max_degree, opts.limits)
                    .generated;
    } else {
        r.associate_minors_generate.applicable = quadratic;
        if (quadratic)
            r.associate_minors_generate.holds =
                generated_up_to(ideal, std::span<const TBinomial>(r.primary->minors),
                                opts.max_degree, opts.limits)
                    .generated;
    }
    return r;
}

// ---------------------------------------------------------------------------
// JSON rendering. nlohmann::ordered_json keeps insertion order, so two runs
// on the same input produce byte-identical output.

using json = nlohmann::ordered_json;

inline json monomial_to_json(const Monomial& m) { return json(m.exponents()); }

inline json relation_to_json(const TBinomial& b) {
    return json{{"lhs", {b.lhs[0], b.lhs[1]}}, {"rhs", {b.rhs[0], b.rhs[1]}}};
}

inline json relations_to_json(const std::vector<TBinomial>& rels) {
    json a = json::array();
    for (const TBinomial& b : rels)
        a.push_back(relation_to_json(b));
    return a;
}

inline json matrix_to_json(const LabeledMatrix& m) {
    json labels = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c)
            row.push_back(m.label(r, c));
        labels.push_back(std::move(row));
    }
    json j{{"kind", m.kind() == MatrixKind::associate ? "associate" : "bivariate"},
           {"rows", m.rows()},
           {"cols", m.cols()}};
    if (m.kind() == MatrixKind::bivariate) {
        j["strip"] = m.strip_power();
        j["a"] = m.row_span();
        j["b"] = m.col_span();
    }
    j["labels"] = std::move(labels);
    return j;
}

inline json stability_to_json(const StabilityResult& s) {
    json j{{"holds", s.holds}};
    if (s.witness)
        j["witness"] = json{{"generator", monomial_to_json(s.witness->generator)},
                            {"to", s.witness->to_var},
                            {"from", s.witness->from_var}};
    return j;
}

inline json verdict_to_json(const TheoremVerdict& v, int max_degree) {
    json j{{"applicable", v.applicable}};
    if (v.holds) {
        j["checked_up_to"] = max_degree;
        j["holds"] = *v.holds;
    }
    return j;
}

inline json report_to_json(const VerificationReport& r) {
    json input{{"source", r.source},
               {"n", r.input.vars()},
               {"degree", r.input.degree()},
               {"generators", json::array()}};
    for (const Monomial& g : r.input.generators())
        input["generators"].push_back(monomial_to_json(g));

    json sortable{{"sortable", r.sortable.sortable}};
    if (r.sortable.witness)
        sortable["witness"] = json::array({monomial_to_json(r.sortable.witness->first),
                                           monomial_to_json(r.sortable.witness->second)});

    json generation{{"max_degree", r.generation.max_degree},
                    {"new_generators_by_degree", json::array()},
                    {"quadratically_generated", r.generation.quadratically_generated}};
    for (const DegreeGeneration& g : r.generation.by_degree)
        generation["new_generators_by_degree"].push_back(
            json{{"degree", g.degree}, {"count", g.new_generators}});

    json out{{"input", std::move(input)}, {"sortable", std::move(sortable)}};
    if (r.stable || r.strongly_stable) {
        json stab;
        if (r.stable)
            stab["stable"] = stability_to_json(*r.stable);
        if (r.strongly_stable)
            stab["strongly_stable"] = stability_to_json(*r.strongly_stable);
        out["stability"] = std::move(stab);
    }
    out["matrix"] = matrix_to_json(r.primary->matrix);
    out["minors"] = relations_to_json(r.primary->minors);
    out["quadratic_kernel"] = relations_to_json(r.kernel);
    out["minors_equal_quadratic_kernel"] = r.minors_equal_kernel;
    if (r.associate_extra)
        out["associate"] = json{{"matrix", matrix_to_json(r.associate_extra->matrix)},
                                {"minors", relations_to_json(r.associate_extra->minors)}};
    out["generation"] = std::move(generation);
    out["theorems"] =
        json{{"sortable_minors_generate", verdict_to_json(r.sortable_minors_generate, r.max_degree)},
             {"bivariate_minors_generate",
              verdict_to_json(r.bivariate_minors_generate, r.max_degree)},
             {"associate_minors_generate",
              verdict_to_json(r.associate_minors_generate, r.max_degree)}};
    out["invariants"] = json{{"mu", r.invariants.mu},
                             {"mu_square", r.invariants.mu_square},
                             {"spread", r.invariants.spread},
                             {"freiman_rhs", r.invariants.freiman_rhs},
                             {"freiman", r.invariants.freiman}};
    return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering.

namespace detail {

inline std::string verdict_line(const char* name, const TheoremVerdict& v, int max_degree) {
    std::string s = name;
    if (!v.applicable)
        return s + ": not applicable\n";
    s += ": holds up to degree " + std::to_string(max_degree) + ": ";
    s += (v.holds && *v.holds) ? "yes" : "NO";
    return s + "\n";
}

inline std::string relation_list(const std::vector<TBinomial>& rels) {
    std::string s;
    for (size_t i = 0; i < rels.size(); ++i) {
        s += (i == 0) ? "  " : "\n  ";
        s += format_tbinomial(rels[i]);
    }
    return s.empty() ? "  (none)\n" : s + "\n";
}

} // namespace detail

inline std::string report_to_text(const VerificationReport& r) {
    std::string s;
    s += "input: " + r.source + "  n=" + std::to_string(r.input.vars()) +
         " degree=" + std::to_string(r.input.degree()) +
         " q=" + std::to_string(r.input.generator_count()) + "\n";
    for (int i = 1; i <= r.input.generator_count(); ++i)
        s += "  u" + std::to_string(i) + " = " + format_monomial(r.input.generator(i)) + "\n";

    s += "sortable: ";
    s += r.sortable.sortable ? "yes" : "no";
    if (r.sortable.witness)
        s += "  (witness pair " + format_monomial(r.sortable.witness->first) + ", " +
             format_monomial(r.sortable.witness->second) + ")";
    s += "\n";
    auto stability_text = [](const char* name, const StabilityResult& st) {
        std::string t = std::string(name) + ": ";
        t += st.holds ? "yes" : "no";
        if (st.witness)
            t += "  (witness " + format_monomial(st.witness->generator) + ", i=" +
                 std::to_string(st.witness->to_var) + ", j=" + std::to_string(st.witness->from_var) +
                 ")";
        return t + "\n";
    };
    if (r.stable)
        s += stability_text("stable", *r.stable);
    if (r.strongly_stable)
        s += stability_text("strongly stable", *r.strongly_stable);

    s += "matrix (";
    s += (r.kind == MatrixKind::associate) ? "associate" : "bivariate";
    s += ", " + std::to_string(r.primary->matrix.rows()) + "x" +
         std::to_string(r.primary->matrix.cols()) + "):\n";
    s += format_matrix(r.primary->matrix);
    s += "minors (" + std::to_string(r.primary->minors.size()) + "):\n";
    s += detail::relation_list(r.primary->minors);
    s += "quadratic kernel (" + std::to_string(r.kernel.size()) + "):\n";
    s += detail::relation_list(r.kernel);
    s += "minors equal quadratic kernel: ";
    s += r.minors_equal_kernel ? "yes" : "no";
    s += "\n";
    if (r.associate_extra) {
        s += "associate matrix (" + std::to_string(r.associate_extra->matrix.rows()) + "x" +
             std::to_string(r.associate_extra->matrix.cols()) + "):\n";
        s += format_matrix(r.associate_extra->matrix);
        s += "associate minors (" + std::to_string(r.associate_extra->minors.size()) + "):\n";
        s += detail::relation_list(r.associate_extra->minors);
    }

    s += "generation up to degree " + std::to_string(r.generation.max_degree) + ":";
    for (const DegreeGeneration& g : r.generation.by_degree)
        s += "  " + std::to_string(g.degree) + ":" + std::to_string(g.new_generators);
    s += "\nquadratically generated: ";
    s += r.generation.quadratically_generated ? "yes" : "no";
    s += "\n";
    s += detail::verdict_line("sortable minors generate", r.sortable_minors_generate, r.max_degree);
    s += detail::verdict_line("bivariate minors generate", r.bivariate_minors_generate,
                              r.max_degree);
    s += detail::verdict_line("associate minors generate", r.associate_minors_generate,
                              r.max_degree);
    s += "invariants: mu=" + std::to_string(r.invariants.mu) +
         " mu2=" + std::to_string(r.invariants.mu_square) +
         " spread=" + std::to_string(r.invariants.spread) +
         " freiman_rhs=" + std::to_string(r.invariants.freiman_rhs) +
         " freiman=" + (r.invariants.freiman ? "yes" : "no") + "\n";
    return s;
}

} // namespace fibrox
