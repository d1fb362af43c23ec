// fibrox: equigenerated monomial ideals, their fiber-cone presentation
// matrices, and a degree-bounded toric verification oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibrox/determinantal.hpp"
#include "fibrox/invariants.hpp"
#include "fibrox/io.hpp"
#include "fibrox/report.hpp"
#include "fibrox/sorting.hpp"
#include "fibrox/stable.hpp"
#include "fibrox/toric.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_property_fails = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct Options {
    std::string path;
    std::vector<int> bounds;
    int degree = -1;
    int max_degree = 6;
    bool bivariate = false;
    bool also_associate = false;
    bool json = false;
    std::string out_path;
};

fibrox::MonomialIdeal load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw fibrox::ParseError(path, 0, 0, "cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return fibrox::parse_ideal(buffer.str(), path);
}

void emit(const Options& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out)
        throw std::invalid_argument("cannot open output file " + opts.out_path);
    out << text;
}

std::optional<fibrox::BoundVector> bound_vector(const Options& opts, int vars) {
    if (opts.bounds.empty())
        return std::nullopt;
    if (static_cast<int>(opts.bounds.size()) != vars)
        throw std::invalid_argument("--bounds needs one entry per variable");
    return fibrox::BoundVector::of(opts.bounds);
}

fibrox::json ideal_to_json(const fibrox::MonomialIdeal& ideal) {
    fibrox::json j{{"n", ideal.vars()},
                   {"degree", ideal.degree()},
                   {"generators", fibrox::json::array()}};
    for (const auto& g : ideal.generators())
        j["generators"].push_back(fibrox::monomial_to_json(g));
    return j;
}

int run_sortable(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    auto result = fibrox::is_sortable(ideal);
    if (opts.json) {
        fibrox::json j{{"sortable", result.sortable}};
        if (result.witness)
            j["witness"] = fibrox::json::array(
                {fibrox::monomial_to_json(result.witness->first),
                 fibrox::monomial_to_json(result.witness->second)});
        emit(opts, j.dump(2) + "\n");
    } else if (result.sortable) {
        emit(opts, "sortable: yes\n");
    } else {
        emit(opts, "sortable: no  (witness pair " + fibrox::format_monomial(result.witness->first) +
                       ", " + fibrox::format_monomial(result.witness->second) + ")\n");
    }
    return result.sortable ? exit_ok : exit_property_fails;
}

int run_stable(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    auto bounds = bound_vector(opts, ideal.vars());
    fibrox::BoundVector c = bounds ? *bounds : fibrox::BoundVector::unbounded(ideal.vars());
    auto stable = fibrox::is_stable(ideal, c);
    auto strong = fibrox::is_strongly_stable(ideal, c);
    if (opts.json) {
        fibrox::json j{{"stable", fibrox::stability_to_json(stable)},
                       {"strongly_stable", fibrox::stability_to_json(strong)}};
        emit(opts, j.dump(2) + "\n");
    } else {
        auto line = [](const char* name, const fibrox::StabilityResult& s) {
            std::string t = std::string(name) + ": " + (s.holds ? "yes" : "no");
            if (s.witness)
                t += "  (witness " + fibrox::format_monomial(s.witness->generator) +
                     ", i=" + std::to_string(s.witness->to_var) +
                     ", j=" + std::to_string(s.witness->from_var) + ")";
            return t + "\n";
        };
        emit(opts, line("stable", stable) + line("strongly stable", strong));
    }
    return stable.holds ? exit_ok : exit_property_fails;
}

std::vector<std::pair<std::string, fibrox::LabeledMatrix>> matrices_for(
    const fibrox::MonomialIdeal& ideal, const Options& opts) {
    std::vector<std::pair<std::string, fibrox::LabeledMatrix>> out;
    if (ideal.vars() == 2) {
        out.emplace_back("bivariate", fibrox::build_bivariate_matrix(ideal));
        if (opts.also_associate)
            out.emplace_back("associate", fibrox::build_associate_matrix(ideal));
    } else if (opts.bivariate) {
        out.emplace_back("bivariate", fibrox::build_bivariate_matrix(ideal)); // rejects n != 2
    } else {
        out.emplace_back("associate", fibrox::build_associate_matrix(ideal));
    }
    return out;
}

int run_matrix(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    std::string text;
    fibrox::json j = fibrox::json::array();
    for (const auto& [name, matrix] : matrices_for(ideal, opts)) {
        if (opts.json) {
            j.push_back(fibrox::matrix_to_json(matrix));
        } else {
            text += name + " matrix (" + std::to_string(matrix.rows()) + "x" +
                    std::to_string(matrix.cols()) + "):\n" + fibrox::format_matrix(matrix);
        }
    }
    emit(opts, opts.json ? j.dump(2) + "\n" : text);
    return exit_ok;
}

int run_minors(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    std::string text;
    fibrox::json j = fibrox::json::object();
    for (const auto& [name, matrix] : matrices_for(ideal, opts)) {
        auto minors = fibrox::binomial_two_minors(matrix);
        if (opts.json) {
            j[name] = fibrox::relations_to_json(minors);
        } else {
            text += name + " minors (" + std::to_string(minors.size()) + "):\n";
            for (const auto& b : minors)
                text += "  " + fibrox::format_tbinomial(b) + "\n";
        }
    }
    emit(opts, opts.json ? j.dump(2) + "\n" : text);
    return exit_ok;
}

int run_toric(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    auto kernel = fibrox::quadratic_kernel(ideal);
    auto generation = fibrox::generation_degrees(ideal, opts.max_degree);
    if (opts.json) {
        fibrox::json j{{"quadratic_kernel", fibrox::relations_to_json(kernel)},
                       {"generation",
                        fibrox::json{{"max_degree", generation.max_degree},
                                     {"new_generators_by_degree", fibrox::json::array()},
                                     {"quadratically_generated", generation.quadratically_generated}}}};
        for (const auto& g : generation.by_degree)
            j["generation"]["new_generators_by_degree"].push_back(
                fibrox::json{{"degree", g.degree}, {"count", g.new_generators}});
        emit(opts, j.dump(2) + "\n");
    } else {
        std::string text = "quadratic kernel (" + std::to_string(kernel.size()) + "):\n";
        for (const auto& b : kernel)
            text += "  " + fibrox::format_tbinomial(b) + "\n";
        text += "new generators by degree:";
        for (const auto& g : generation.by_degree)
            text += "  " + std::to_string(g.degree) + ":" + std::to_string(g.new_generators);
        text += "\nquadratically generated up to " + std::to_string(generation.max_degree) + ": ";
        text += generation.quadratically_generated ? "yes" : "no";
        text += "\n";
        emit(opts, text);
    }
    return exit_ok;
}

int run_freiman(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    auto r = fibrox::is_freiman(ideal);
    if (opts.json) {
        fibrox::json j{{"mu", r.mu},
                       {"mu_square", r.mu_square},
                       {"spread", r.spread},
                       {"freiman_rhs", r.freiman_rhs},
                       {"freiman", r.freiman}};
        emit(opts, j.dump(2) + "\n");
    } else {
        emit(opts, std::string("freiman: ") + (r.freiman ? "true" : "false") + " (mu2=" +
                       std::to_string(r.mu_square) + ", l=" + std::to_string(r.spread) +
                       ", mu=" + std::to_string(r.mu) + ")\n");
    }
    return r.freiman ? exit_ok : exit_property_fails;
}

int run_verify(const Options& opts) {
    auto ideal = load_ideal(opts.path);
    fibrox::VerifyOptions vopts;
    vopts.max_degree = opts.max_degree;
    vopts.also_associate = opts.also_associate;
    vopts.bounds = bound_vector(opts, ideal.vars());
    auto report = fibrox::verify_ideal(ideal, vopts, opts.path);
    emit(opts, opts.json ? fibrox::report_to_json(report).dump(2) + "\n"
                         : fibrox::report_to_text(report));
    return report.all_applicable_hold() ? exit_ok : exit_property_fails;
}

int run_veronese(const Options& opts) {
    if (opts.bounds.empty())
        throw std::invalid_argument("veronese needs --bounds");
    if (opts.degree < 0)
        throw std::invalid_argument("veronese needs --degree");
    auto ideal = fibrox::veronese_type(fibrox::BoundVector::of(opts.bounds),
                                       static_cast<int>(opts.bounds.size()), opts.degree);
    emit(opts, opts.json ? ideal_to_json(ideal).dump(2) + "\n" : fibrox::format_ideal(ideal));
    return exit_ok;
}

int run_borel(const Options& opts) {
    auto seeds = load_ideal(opts.path);
    auto bounds = bound_vector(opts, seeds.vars());
    fibrox::BoundVector c = bounds ? *bounds : fibrox::BoundVector::unbounded(seeds.vars());
    auto closure = fibrox::borel_closure(seeds.generators(), c);
    emit(opts, opts.json ? ideal_to_json(closure).dump(2) + "\n" : fibrox::format_ideal(closure));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equigenerated monomial ideals: presentation matrices, binomial 2-minors,\n"
                 "sortability and stability checks, and a degree-bounded toric oracle"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* cmd, bool needs_path) {
        if (needs_path)
            cmd->add_option("path", opts.path, "ideal file")->required();
        cmd->add_option("--bounds", opts.bounds, "comma-separated exponent bounds c1,c2,...")
            ->delimiter(',');
        cmd->add_option("--degree", opts.degree, "generation degree");
        cmd->add_option("--max-degree", opts.max_degree, "verification degree bound (default 6)");
        cmd->add_flag("--bivariate", opts.bivariate, "use the two-variable Hankel construction");
        cmd->add_flag("--also-associate", opts.also_associate,
                      "additionally report the associate construction");
        cmd->add_flag("--json", opts.json, "machine-readable output");
        cmd->add_option("-o,--out", opts.out_path, "write output to a file");
        return cmd;
    };

    auto* sortable = add_common(app.add_subcommand("sortable", "sortability check"), true);
    auto* stable = add_common(app.add_subcommand("stable", "stability checks under --bounds"), true);
    auto* matrix = add_common(app.add_subcommand("matrix", "presentation matrix"), true);
    auto* minors = add_common(app.add_subcommand("minors", "binomial 2-minors"), true);
    auto* toric = add_common(app.add_subcommand("toric", "quadratic kernel and generation degrees"),
                             true);
    auto* freiman = add_common(app.add_subcommand("freiman", "Freiman invariants"), true);
    auto* verify = add_common(app.add_subcommand("verify", "full verification report"), true);
    auto* veronese = add_common(
        app.add_subcommand("veronese", "Veronese-type ideal from --bounds and --degree"), false);
    auto* borel = add_common(
        app.add_subcommand("borel", "smallest strongly stable ideal containing the file's monomials"),
        true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sortable->parsed())
            return run_sortable(opts);
        if (stable->parsed())
            return run_stable(opts);
        if (matrix->parsed())
            return run_matrix(opts);
        if (minors->parsed())
            return run_minors(opts);
        if (toric->parsed())
            return run_toric(opts);
        if (freiman->parsed())
            return run_freiman(opts);
        if (verify->parsed())
            return run_verify(opts);
        if (veronese->parsed())
            return run_veronese(opts);
        if (borel->parsed())
            return run_borel(opts);
    } catch (const fibrox::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const fibrox::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
