#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"

namespace fibrox {

// Ideal file format: UTF-8 text, '#' starts a comment to end of line, the
// first significant line is "n <int>", and every following significant line
// is one generator, either as n space-separated nonnegative exponents or as
// a symbolic monomial x<i>[^<k>] with factors joined by '*'. Styles may be
// mixed within one file.

class ParseError : public std::runtime_error {
public:
    ParseError(std::string source, int line, int column, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          source_name(std::move(source)),
          line(line),
          column(column) {}

    std::string source_name;
    int line;
    int column;
};

/// Raw parse result, before minimal-generator normalization.
struct IdealDocument {
    std::string source;
    int vars = 0;
    std::vector<Monomial> monomials;
};

namespace detail {

struct Cursor {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
};

inline void skip_line_remainder(Cursor& c) {
    while (!c.done() && c.peek() != '\n')
        c.advance();
}

inline void skip_blank(Cursor& c) {
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '#') {
            skip_line_remainder(c);
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            c.advance();
        } else {
            break;
        }
    }
}

inline int parse_int(Cursor& c, const std::string& source, const char* what) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError(source, c.line, c.col, std::string("expected ") + what);
    long long value = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        value = value * 10 + (c.peek() - '0');
        if (value > 1'000'000)
            throw ParseError(source, c.line, c.col, std::string(what) + " out of range");
        c.advance();
    }
    return static_cast<int>(value);
}

inline void skip_inline_space(Cursor& c) {
    while (!c.done() && (c.peek() == ' ' || c.peek() == '\t' || c.peek() == '\r'))
        c.advance();
}

inline bool at_line_end(Cursor& c) {
    skip_inline_space(c);
    if (c.done())
        return true;
    if (c.peek() == '#') {
        skip_line_remainder(c);
        return true;
    }
    return c.peek() == '\n';
}

inline Monomial parse_exponent_row(Cursor& c, const std::string& source, int vars) {
    std::vector<int> exps;
    exps.reserve(static_cast<size_t>(vars));
    for (int i = 0; i < vars; ++i) {
        skip_inline_space(c);
        if (c.done() || c.peek() == '\n' || c.peek() == '#')
            throw ParseError(source, c.line, c.col,
                             "expected " + std::to_string(vars) + " exponents on the line");
        exps.push_back(parse_int(c, source, "exponent"));
    }
    if (!at_line_end(c))
        throw ParseError(source, c.line, c.col, "trailing input after the exponent row");
    return Monomial(std::move(exps));
}

inline Monomial parse_symbolic(Cursor& c, const std::string& source, int vars) {
    std::vector<int> exps(static_cast<size_t>(vars), 0);
    while (true) {
        skip_inline_space(c);
        if (c.done() || c.peek() != 'x')
            throw ParseError(source, c.line, c.col, "expected a factor of the form x<i>[^<k>]");
        c.advance();
        const int var_line = c.line, var_col = c.col;
        int index = parse_int(c, source, "variable index");
        if (index < 1 || index > vars)
            throw ParseError(source, var_line, var_col,
                             "variable index " + std::to_string(index) + " outside 1.." +
                                 std::to_string(vars));
        int power = 1;
        if (!c.done() && c.peek() == '^') {
            c.advance();
            power = parse_int(c, source, "exponent");
        }
        exps[static_cast<size_t>(index - 1)] += power;
        skip_inline_space(c);
        if (!c.done() && c.peek() == '*') {
            c.advance();
            continue;
        }
        break;
    }
    if (!at_line_end(c))
        throw ParseError(source, c.line, c.col, "trailing input after the monomial");
    return Monomial(std::move(exps));
}

} // namespace detail

inline IdealDocument parse_ideal_document(std::string_view text, std::string source = "<input>") {
    detail::Cursor c{text};
    detail::skip_blank(c);
    if (c.done() || c.peek() != 'n')
        throw ParseError(source, c.line, c.col, "expected the header line 'n <count>'");
    c.advance();
    detail::skip_inline_space(c);
    IdealDocument doc;
    doc.source = source;
    doc.vars = detail::parse_int(c, source, "variable count");
    if (doc.vars < 1)
        throw ParseError(source, c.line, c.col, "variable count must be at least 1");
    if (!detail::at_line_end(c))
        throw ParseError(source, c.line, c.col, "trailing input after the header line");

    while (true) {
        detail::skip_blank(c);
        if (c.done())
            break;
        if (std::isdigit(static_cast<unsigned char>(c.peek())))
            doc.monomials.push_back(detail::parse_exponent_row(c, source, doc.vars));
        else
            doc.monomials.push_back(detail::parse_symbolic(c, source, doc.vars));
    }
    if (doc.monomials.empty())
        throw ParseError(source, c.line, c.col, "no generators given");
    return doc;
}

/// Parse and normalize. Non-equigenerated input (after dropping redundant
/// generators) is rejected.
inline MonomialIdeal parse_ideal(std::string_view text, std::string source = "<input>") {
    IdealDocument doc = parse_ideal_document(text, source);
    try {
        return MonomialIdeal(doc.vars, std::move(doc.monomials));
    } catch (const std::invalid_argument& e) {
        throw ParseError(doc.source, 0, 0, e.what());
    }
}

/// Canonical exponent-row rendering; reparsing yields an identical ideal.
inline std::string format_ideal(const MonomialIdeal& ideal) {
    std::string s = "n " + std::to_string(ideal.vars()) + "\n";
    for (const Monomial& g : ideal.generators()) {
        for (int i = 1; i <= ideal.vars(); ++i) {
            if (i > 1)
                s += ' ';
            s += std::to_string(g.exponent(i));
        }
        s += '\n';
    }
    return s;
}

} // namespace fibrox
