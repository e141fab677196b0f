#pragma once

// The regional presentation matrix: one row per crossing, one column per
// region. The crossing relation a + b x + c xy + d y = 0 puts coefficient
// 1, x, xy, y at the regions holding roles a, b, c, d; roles landing on the
// same region accumulate.

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tridle/diagram.hpp"
#include "tridle/laurent.hpp"

namespace tridle {

inline LaurentPoly role_coefficient(int role) {
    switch (role) {
        case RoleA: return LaurentPoly(1);
        case RoleB: return LaurentPoly::x();
        case RoleC: return LaurentPoly::term(1, 1, 1);
        default: return LaurentPoly::y();
    }
}

struct PresentationMatrix {
    std::vector<int> row_labels; // crossing ids
    std::vector<int> col_labels; // region ids
    PolyMatrix entries;

    size_t rows() const { return entries.rows(); }
    size_t cols() const { return entries.cols(); }

    friend bool operator==(const PresentationMatrix& a, const PresentationMatrix& b) {
        return a.row_labels == b.row_labels && a.col_labels == b.col_labels &&
               a.entries == b.entries;
    }
};

inline PresentationMatrix build_matrix(const Diagram& d, const RegionMap& rm) {
    PresentationMatrix m;
    m.entries = PolyMatrix(d.n, rm.count());
    for (size_t r = 0; r < rm.count(); ++r) m.col_labels.push_back((int)r);
    for (int c = 0; c < d.n; ++c) {
        m.row_labels.push_back(c);
        auto roles = d.corner_labels(c);
        for (int role = 0; role < 4; ++role)
            m.entries.at(c, roles[role]) += role_coefficient(role);
    }
    return m;
}

inline PresentationMatrix build_matrix(const Diagram& d) {
    return build_matrix(d, regions(d));
}

// --- matrix equivalence moves ------------------------------------------------

struct M1 { size_t i, j; LaurentPoly lambda; };        // row i += lambda * row j
struct M2 { size_t i, j; };                            // delete row i, column j
struct M3 { size_t i, j, k; };                         // col k += col j; drop row i, col j
struct M4 { size_t i; Unit u; };                       // row i *= unit
struct M5 { bool swap_rows; size_t i, j; };            // swap rows or columns

using MoveSpec = std::variant<M1, M2, M3, M4, M5>;

inline PresentationMatrix transform(const PresentationMatrix& m, const MoveSpec& op) {
    PresentationMatrix out = m;
    const size_t R = m.rows(), C = m.cols();
    auto drop_row = [&](size_t i) {
        PresentationMatrix t;
        t.col_labels = out.col_labels;
        t.entries = PolyMatrix(out.rows() - 1, out.cols());
        size_t ti = 0;
        for (size_t r = 0; r < out.rows(); ++r) {
            if (r == i) continue;
            t.row_labels.push_back(out.row_labels[r]);
            for (size_t c = 0; c < out.cols(); ++c) t.entries.at(ti, c) = out.entries.at(r, c);
            ++ti;
        }
        out = std::move(t);
    };
    auto drop_col = [&](size_t j) {
        PresentationMatrix t;
        t.row_labels = out.row_labels;
        t.entries = PolyMatrix(out.rows(), out.cols() - 1);
        size_t tc = 0;
        for (size_t c = 0; c < out.cols(); ++c) {
            if (c == j) continue;
            t.col_labels.push_back(out.col_labels[c]);
            for (size_t r = 0; r < out.rows(); ++r) t.entries.at(r, tc) = out.entries.at(r, c);
            ++tc;
        }
        out = std::move(t);
    };

    if (const M1* op1 = std::get_if<M1>(&op)) {
        if (op1->i >= R || op1->j >= R)
            throw PreconditionViolated("M1: row index out of range");
        if (op1->i == op1->j)
            throw PreconditionViolated("M1: source and target rows coincide");
        for (size_t c = 0; c < C; ++c)
            out.entries.at(op1->i, c) += op1->lambda * m.entries.at(op1->j, c);
    } else if (const M2* op2 = std::get_if<M2>(&op)) {
        if (op2->i >= R || op2->j >= C)
            throw PreconditionViolated("M2: index out of range");
        for (size_t r = 0; r < R; ++r)
            if (r != op2->i && !m.entries.at(r, op2->j).is_zero())
                throw PreconditionViolated(
                    "M2: column has a nonzero entry outside the pivot row");
        const LaurentPoly& pivot = m.entries.at(op2->i, op2->j);
        if (pivot.is_zero() || !pivot.is_unit())
            throw PreconditionViolated("M2: pivot entry is not of the form +-x^l*y^m");
        drop_row(op2->i);
        drop_col(op2->j);
    } else if (const M3* op3 = std::get_if<M3>(&op)) {
        if (op3->i >= R || op3->j >= C || op3->k >= C || op3->j == op3->k)
            throw PreconditionViolated("M3: bad indices");
        const LaurentPoly& f = m.entries.at(op3->i, op3->j);
        if (f.is_zero())
            throw PreconditionViolated("M3: entry at (i,j) is zero");
        if (m.entries.at(op3->i, op3->k) != -f)
            throw PreconditionViolated("M3: entry at (i,k) is not the negative of (i,j)");
        for (size_t c = 0; c < C; ++c)
            if (c != op3->j && c != op3->k && !m.entries.at(op3->i, c).is_zero())
                throw PreconditionViolated("M3: row has more than two nonzero entries");
        for (size_t r = 0; r < R; ++r)
            out.entries.at(r, op3->k) += m.entries.at(r, op3->j);
        drop_row(op3->i);
        drop_col(op3->j);
    } else if (const M4* op4 = std::get_if<M4>(&op)) {
        if (op4->i >= R) throw PreconditionViolated("M4: row index out of range");
        for (size_t c = 0; c < C; ++c)
            out.entries.at(op4->i, c) = op4->u * m.entries.at(op4->i, c);
    } else {
        const M5& op5 = std::get<M5>(op);
        if (op5.swap_rows) {
            if (op5.i >= R || op5.j >= R)
                throw PreconditionViolated("M5: row index out of range");
            std::swap(out.row_labels[op5.i], out.row_labels[op5.j]);
            for (size_t c = 0; c < C; ++c)
                std::swap(out.entries.at(op5.i, c), out.entries.at(op5.j, c));
        } else {
            if (op5.i >= C || op5.j >= C)
                throw PreconditionViolated("M5: column index out of range");
            std::swap(out.col_labels[op5.i], out.col_labels[op5.j]);
            for (size_t r = 0; r < R; ++r)
                std::swap(out.entries.at(r, op5.i), out.entries.at(r, op5.j));
        }
    }
    return out;
}

// Greedy shrinking with the unit-entry moves. Only moves that provably keep
// the minor gcd are used: M2 on unit pivots, M3 when the paired entries are
// units, and M1 row combinations that expose such pivots.
inline PresentationMatrix simplify(const PresentationMatrix& input, uint64_t seed = 0) {
    PresentationMatrix m = input;
    std::mt19937_64 rng(seed);
    bool randomized = seed != 0;
    for (;;) {
        struct Step { int kind; size_t a, b, c; };
        std::vector<Step> steps;
        // M2 sites: a column whose single nonzero entry is a unit
        for (size_t j = 0; j < m.cols(); ++j) {
            size_t nz = 0, row = 0;
            for (size_t r = 0; r < m.rows(); ++r)
                if (!m.entries.at(r, j).is_zero()) {
                    ++nz;
                    row = r;
                }
            if (nz == 1 && m.entries.at(row, j).is_unit())
                steps.push_back({0, row, j, 0});
        }
        // M3 sites with unit entries
        for (size_t r = 0; r < m.rows(); ++r) {
            std::vector<size_t> nz;
            for (size_t j = 0; j < m.cols(); ++j)
                if (!m.entries.at(r, j).is_zero()) nz.push_back(j);
            if (nz.size() == 2 && m.entries.at(r, nz[0]).is_unit() &&
                m.entries.at(r, nz[0]) == -m.entries.at(r, nz[1]))
                steps.push_back({1, r, nz[0], nz[1]});
        }
        // column with two unit entries: an M1 creates an M2 pivot
        if (steps.empty()) {
            for (size_t j = 0; j < m.cols() && steps.empty(); ++j) {
                std::vector<size_t> nz;
                for (size_t r = 0; r < m.rows(); ++r)
                    if (!m.entries.at(r, j).is_zero()) nz.push_back(r);
                if (nz.size() == 2 && m.entries.at(nz[0], j).is_unit() &&
                    m.entries.at(nz[1], j).is_unit())
                    steps.push_back({2, nz[0], nz[1], j});
            }
        }
        if (steps.empty()) return m;
        const Step& s = randomized ? steps[rng() % steps.size()] : steps.front();
        if (s.kind == 0) {
            m = transform(m, M2{s.a, s.b});
        } else if (s.kind == 1) {
            m = transform(m, M3{s.a, s.b, s.c});
        } else {
            // row[b] += lambda * row[a] with lambda = -m[b][col]/m[a][col]
            LaurentPoly lambda = -exact_div(m.entries.at(s.b, s.c), m.entries.at(s.a, s.c));
            m = transform(m, M1{s.b, s.a, lambda});
            m = transform(m, M2{s.a, s.c});
        }
    }
}

// --- classical one-variable specialization ------------------------------------

namespace detail {

inline LaurentPoly substitute_y(const LaurentPoly& p, long value) {
    // y -> value (value is +-1 in practice)
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) {
        Integer coeff = c;
        if (value == -1 && (e.m % 2 != 0)) coeff = -coeff;
        if (value != 1 && value != -1) {
            Integer f = 1;
            long reps = e.m >= 0 ? e.m : -e.m;
            for (long k = 0; k < reps; ++k) f *= value;
            if (e.m < 0) throw NotDivisible("negative power of a non-unit substitution");
            coeff = c * f;
        }
        out.add_term({e.l, 0}, coeff);
    }
    return out;
}

inline LaurentPoly negate_variable_x(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms())
        out.add_term(e, (e.l % 2 != 0) ? Integer(-c) : c);
    return out;
}

} // namespace detail

// One-variable polynomial in t, canonical up to +-t^k: lowest exponent 0,
// positive leading coefficient.
inline LaurentPoly normalize_univariate(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    auto [n, u] = unit_normalize(p);
    (void)u;
    return n;
}

// Classical Alexander polynomial of a knot diagram, computed regionally:
// specialize the presentation matrix, delete the two columns of regions
// adjacent across the lowest-numbered edge, take the determinant. The
// substitution is (x, y) -> (-t, -1); the result lives in the x slot.
inline LaurentPoly alexander_polynomial(const Diagram& d) {
    if (d.components != 1)
        throw MultiComponent("Alexander specialization needs a knot diagram");
    if (d.zero_unknot) return LaurentPoly(1);
    PresentationMatrix m = build_matrix(d);
    int col_a = -1, col_b = -1;
    for (int e = 1; e <= 2 * d.n; ++e) {
        int l = d.left_region(e), r = d.right_region(e);
        if (l != r) {
            col_a = l;
            col_b = r;
            break;
        }
    }
    if (col_a < 0) throw InvalidPd("no edge with distinct flanking regions");
    PolyMatrix sq(m.rows(), m.cols() - 2);
    for (size_t r = 0; r < m.rows(); ++r) {
        size_t t = 0;
        for (size_t c = 0; c < m.cols(); ++c) {
            if ((int)c == col_a || (int)c == col_b) continue;
            sq.at(r, t++) = detail::substitute_y(m.entries.at(r, c), -1);
        }
    }
    LaurentPoly det_t = detail::negate_variable_x(det(sq));
    return normalize_univariate(det_t);
}

// --- rendering ----------------------------------------------------------------

inline std::string render_text(const PresentationMatrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows() + 1,
                                                std::vector<std::string>(m.cols() + 1));
    cells[0][0] = "";
    for (size_t c = 0; c < m.cols(); ++c)
        cells[0][c + 1] = "g" + std::to_string(m.col_labels[c]);
    for (size_t r = 0; r < m.rows(); ++r) {
        cells[r + 1][0] = "r" + std::to_string(m.row_labels[r]);
        for (size_t c = 0; c < m.cols(); ++c) {
            const LaurentPoly& p = m.entries.at(r, c);
            cells[r + 1][c + 1] = p.is_zero() ? "." : render(p);
        }
    }
    std::vector<size_t> width(m.cols() + 1, 0);
    for (const auto& row : cells)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << std::string(width[c] - row[c].size(), ' ') << row[c];
            out << (c + 1 == row.size() ? "\n" : "  ");
        }
    }
    return out.str();
}

inline std::string render_latex(const PresentationMatrix& m) {
    std::ostringstream out;
    out << "\\begin{array}{c|" << std::string(m.cols(), 'c') << "}\n";
    for (size_t c = 0; c < m.cols(); ++c) out << " & g_{" << m.col_labels[c] << "}";
    out << " \\\\\\hline\n";
    for (size_t r = 0; r < m.rows(); ++r) {
        out << "r_{" << m.row_labels[r] << "}";
        for (size_t c = 0; c < m.cols(); ++c) {
            const LaurentPoly& p = m.entries.at(r, c);
            out << " & " << (p.is_zero() ? "" : render_latex(p));
        }
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

} // namespace tridle
