#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibrox/ideal.hpp"
#include "fibrox/monomial.hpp"
#include "fibrox/relations.hpp"

namespace fibrox {

// Two matrix constructions over a degree-d ideal I with G(I) = {u_1,...,u_q}:
//
//   associate (any n >= 2): row i lists the degree-d monomials divisible by
//   x_i in descending lex order, i.e. cell (i,j) = x_i * w_j with w_j the
//   j-th monomial of degree d-1. Cells outside G(I) are structural zeros and
//   all-zero columns are dropped.
//
//   bivariate (n = 2): after dividing out the largest common x2-power d',
//   the (a+1) x (b+1) Hankel-style grid of consecutive degree monomials,
//   where a is the x2-exponent of u_2 and a+b that of u_q, masked to G(I).
//
// In both layouts the diagonal and antidiagonal of any 2x2 submatrix have
// equal lattice products, so every fully labeled 2x2 whose label multisets
// differ yields a relation of the presentation ideal.

enum class MatrixKind { associate, bivariate };

struct MatrixCell {
    Monomial lattice;
    int label = 0; // 1-based generator index; 0 marks a structural zero
};

class LabeledMatrix {
public:
    LabeledMatrix(MatrixKind kind, int rows, int cols, std::vector<MatrixCell> cells)
        : kind_(kind), rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ < 1 || cols_ < 1 || cells_.size() != static_cast<size_t>(rows_ * cols_))
            throw std::invalid_argument("labeled matrix shape mismatch");
    }

    MatrixKind kind() const { return kind_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const MatrixCell& cell(int row, int col) const {
        return cells_[static_cast<size_t>(row * cols_ + col)];
    }
    int label(int row, int col) const { return cell(row, col).label; }
    const Monomial& lattice(int row, int col) const { return cell(row, col).lattice; }

    // Bivariate layout parameters; zero for the associate kind.
    int strip_power() const { return strip_; }
    int row_span() const { return row_span_; } // a
    int col_span() const { return col_span_; } // b

    void set_bivariate_params(int strip, int a, int b) {
        strip_ = strip;
        row_span_ = a;
        col_span_ = b;
    }

private:
    MatrixKind kind_;
    int rows_;
    int cols_;
    std::vector<MatrixCell> cells_;
    int strip_ = 0;
    int row_span_ = 0;
    int col_span_ = 0;
};

/// Drops columns that carry no label at all.
inline LabeledMatrix prune_zero_columns(const LabeledMatrix& m) {
    std::vector<int> keep;
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (m.label(r, c) != 0) {
                keep.push_back(c);
                break;
            }
    if (keep.empty())
        throw std::invalid_argument("matrix has no labeled cell");
    std::vector<MatrixCell> cells;
    cells.reserve(static_cast<size_t>(m.rows()) * keep.size());
    for (int r = 0; r < m.rows(); ++r)
        for (int c : keep)
            cells.push_back(m.cell(r, c));
    LabeledMatrix out(m.kind(), m.rows(), static_cast<int>(keep.size()), std::move(cells));
    out.set_bivariate_params(m.strip_power(), m.row_span(), m.col_span());
    return out;
}

/// The n x C(n+d-2, d-1) grid of x_i-multiples of the degree-(d-1) monomials,
/// masked to G(I); with prune_zero_columns (the default) the all-zero columns
/// are removed.
inline LabeledMatrix build_associate_matrix(const MonomialIdeal& ideal, bool prune = true) {
    const int n = ideal.vars();
    const int d = ideal.degree();
    if (n < 2)
        throw std::invalid_argument("associate matrix needs at least two variables");
    if (d < 1)
        throw std::invalid_argument("associate matrix needs a positive degree");

    const std::vector<Monomial> cofactors = power_basis(n, d - 1);
    std::vector<MatrixCell> cells;
    cells.reserve(static_cast<size_t>(n) * cofactors.size());
    for (int i = 1; i <= n; ++i)
        for (const Monomial& w : cofactors) {
            Monomial m = mul(Monomial::variable(n, i), w);
            int label = ideal.index_of(m).value_or(0);
            cells.push_back(MatrixCell{std::move(m), label});
        }
    LabeledMatrix full(MatrixKind::associate, n, static_cast<int>(cofactors.size()),
                       std::move(cells));
    return prune ? prune_zero_columns(full) : full;
}

/// Hankel-style grid for two variables. The common x2-power d' is divided
/// out first, after which the top generator is a pure x1-power; lattice
/// monomials are stored in this normalized frame and labels keep the
/// original generator indices.
inline LabeledMatrix build_bivariate_matrix(const MonomialIdeal& ideal) {
    if (ideal.vars() != 2)
        throw std::invalid_argument("bivariate matrix needs exactly two variables");
    const int q = ideal.generator_count();
    const int strip = ideal.generator(1).exponent(2); // smallest x2-exponent
    const int d = ideal.degree() - strip;

    std::map<int, int> label_by_exp; // normalized x2-exponent -> generator index
    for (int i = 1; i <= q; ++i)
        label_by_exp[ideal.generator(i).exponent(2) - strip] = i;

    const int a = (q >= 2) ? ideal.generator(2).exponent(2) - strip : 0;
    const int b = (q >= 2) ? ideal.generator(q).exponent(2) - strip - a : 0;

    std::vector<MatrixCell> cells;
    cells.reserve(static_cast<size_t>(a + 1) * static_cast<size_t>(b + 1));
    for (int r = 0; r <= a; ++r)
        for (int c = 0; c <= b; ++c) {
            const int e = r + c;
            Monomial m(std::vector<int>{d - e, e});
            auto it = label_by_exp.find(e);
            cells.push_back(MatrixCell{std::move(m), it == label_by_exp.end() ? 0 : it->second});
        }
    LabeledMatrix out(MatrixKind::bivariate, a + 1, b + 1, std::move(cells));
    out.set_bivariate_params(strip, a, b);
    return out;
}

/// Canonical relations from all fully labeled 2x2 submatrices whose diagonal
/// and antidiagonal label multisets differ. Duplicates arising from several
/// submatrices are merged.
inline std::vector<TBinomial> binomial_two_minors(const LabeledMatrix& m) {
    std::set<TBinomial> out;
    for (int r1 = 0; r1 < m.rows(); ++r1)
        for (int r2 = r1 + 1; r2 < m.rows(); ++r2)
            for (int c1 = 0; c1 < m.cols(); ++c1) {
                if (m.label(r1, c1) == 0 && m.label(r2, c1) == 0)
                    continue;
                for (int c2 = c1 + 1; c2 < m.cols(); ++c2) {
                    const int a = m.label(r1, c1), b = m.label(r1, c2);
                    const int c = m.label(r2, c1), e = m.label(r2, c2);
                    if (a == 0 || b == 0 || c == 0 || e == 0)
                        continue;
                    std::array<int, 2> diag{a, e}, anti{b, c};
                    if (diag[0] > diag[1])
                        std::swap(diag[0], diag[1]);
                    if (anti[0] > anti[1])
                        std::swap(anti[0], anti[1]);
                    if (diag == anti)
                        continue;
                    out.insert(TBinomial::make(diag, anti));
                }
            }
    return std::vector<TBinomial>(out.begin(), out.end());
}

/// Cells rendered as t<i> or 0, columns aligned.
inline std::string format_matrix(const LabeledMatrix& m) {
    std::vector<std::string> rendered;
    size_t width = 1;
    rendered.reserve(static_cast<size_t>(m.rows() * m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            int l = m.label(r, c);
            rendered.push_back(l == 0 ? "0" : "t" + std::to_string(l));
            width = std::max(width, rendered.back().size());
        }
    std::string s;
    for (int r = 0; r < m.rows(); ++r) {
        s += "[";
        for (int c = 0; c < m.cols(); ++c) {
            const std::string& cell = rendered[static_cast<size_t>(r * m.cols() + c)];
            s += ' ';
            s.append(width - cell.size(), ' ');
            s += cell;
        }
        s += " ]\n";
    }
    return s;
}

} // namespace fibrox
