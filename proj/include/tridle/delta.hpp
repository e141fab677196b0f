#pragma once

// The two-variable polynomial invariant: unit-normalized gcd of all maximal
// minors of the presentation matrix, plus coloring counts over prime fields.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tridle/laurent.hpp"
#include "tridle/presentation.hpp"
#include "tridle/threadpool.hpp"

namespace tridle {

// Determinants of all r x r column selections, enumerated lexicographically
// over the dropped column sets.
inline std::vector<LaurentPoly> maximal_minors(const PolyMatrix& m,
                                               unsigned workers = 1) {
    const size_t r = m.rows(), c = m.cols();
    if (c < r) throw ShapeError("matrix has fewer columns than rows");
    const size_t drop = c - r;
    std::vector<std::vector<size_t>> dropped;
    std::vector<size_t> cur(drop);
    // lexicographic enumeration of dropped index tuples
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t from) {
        if (pos == drop) {
            dropped.push_back(cur);
            return;
        }
        for (size_t j = from; j < c; ++j) {
            cur[pos] = j;
            rec(pos + 1, j + 1);
        }
    };
    rec(0, 0);
    std::vector<LaurentPoly> out(dropped.size());
    parallel_for(dropped.size(), workers, [&](size_t idx) {
        PolyMatrix sq(r, r);
        size_t t = 0;
        const auto& dr = dropped[idx];
        for (size_t j = 0; j < c; ++j) {
            if (std::find(dr.begin(), dr.end(), j) != dr.end()) continue;
            for (size_t i = 0; i < r; ++i) sq.at(i, t) = m.at(i, j);
            ++t;
        }
        out[idx] = det(sq);
    });
    return out;
}

inline std::vector<LaurentPoly> maximal_minors(const PresentationMatrix& m,
                                               unsigned workers = 1) {
    return maximal_minors(m.entries, workers);
}

namespace detail {

// Fraction-free solve of B z = det(B) * c for square B, via Bareiss forward
// elimination of [B | c...] and exact back substitution. Returns false when
// B is singular. Several augmented columns are solved in one elimination.
inline bool cramer_solve(PolyMatrix w, size_t n,
                         std::vector<std::vector<LaurentPoly>>& solutions,
                         LaurentPoly& determinant) {
    const size_t total = w.cols(); // n plus the augmented columns
    LaurentPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t best = n;
        for (size_t i = k; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            if (best == n || w.at(i, k).term_count() < w.at(best, k).term_count())
                best = i;
        }
        if (best == n) return false;
        if (best != k) {
            for (size_t j = k; j < total; ++j) std::swap(w.at(k, j), w.at(best, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < total; ++j)
                w.at(i, j) =
                    exact_div(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
            w.at(i, k) = LaurentPoly();
        }
        prev = w.at(k, k);
    }
    if (w.at(n - 1, n - 1).is_zero()) return false;
    const LaurentPoly& dn = w.at(n - 1, n - 1);
    determinant = sign < 0 ? -dn : dn;
    solutions.clear();
    for (size_t a = n; a < total; ++a) {
        std::vector<LaurentPoly> z(n);
        z[n - 1] = w.at(n - 1, a);
        for (size_t ii = n - 1; ii-- > 0;) {
            LaurentPoly acc = w.at(ii, a) * dn;
            for (size_t j = ii + 1; j < n; ++j) acc -= w.at(ii, j) * z[j];
            z[ii] = exact_div(acc, w.at(ii, ii));
        }
        if (sign < 0)
            for (auto& v : z) v = -v;
        solutions.push_back(std::move(z));
    }
    return true;
}

} // namespace detail

// gcd of all maximal minors of an r x (r+2) matrix. The two-dimensional
// kernel is computed fraction-free; the 2x2 minors of the kernel pair equal
// the maximal minors up to one common factor, which is divided back out.
// Falls back to direct minor enumeration for other shapes or on any snag.
inline LaurentPoly delta_of_matrix(const PolyMatrix& m, unsigned workers = 1) {
    const size_t r = m.rows(), c = m.cols();
    if (c < r) throw ShapeError("matrix has fewer columns than rows");
    if (r == 0) return LaurentPoly(1);
    auto naive = [&] { return gcd_many(maximal_minors(m, workers)); };
    if (c != r + 2) return naive();

    // forward elimination with column pivoting to find r pivot columns
    PolyMatrix w = m;
    std::vector<size_t> colmap(c);
    for (size_t j = 0; j < c; ++j) colmap[j] = j;
    LaurentPoly prev(1);
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    for (size_t j = 0; j < c && rank < r; ++j) {
        size_t best = r;
        for (size_t i = rank; i < r; ++i) {
            if (w.at(i, j).is_zero()) continue;
            if (best == r || w.at(i, j).term_count() < w.at(best, j).term_count())
                best = i;
        }
        if (best == r) continue;
        if (best != rank)
            for (size_t jj = 0; jj < c; ++jj) std::swap(w.at(rank, jj), w.at(best, jj));
        for (size_t i = rank + 1; i < r; ++i) {
            for (size_t jj = 0; jj < c; ++jj) {
                if (jj == j) continue;
                w.at(i, jj) =
                    exact_div(w.at(rank, j) * w.at(i, jj) - w.at(i, j) * w.at(rank, jj),
                              prev);
            }
            w.at(i, j) = LaurentPoly();
        }
        prev = w.at(rank, j);
        pivot_cols.push_back(colmap[j]);
        ++rank;
    }
    if (rank < r) return LaurentPoly(); // every maximal minor vanishes

    std::vector<size_t> free_cols;
    for (size_t j = 0; j < c; ++j)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), j) == pivot_cols.end())
            free_cols.push_back(j);
    const size_t f0 = free_cols[0], f1 = free_cols[1];

    // one elimination of [B | col_f0 | col_f1], two back substitutions
    PolyMatrix aug(r, r + 2);
    for (size_t i = 0; i < r; ++i) {
        for (size_t k = 0; k < r; ++k) aug.at(i, k) = m.at(i, pivot_cols[k]);
        aug.at(i, r) = m.at(i, f0);
        aug.at(i, r + 1) = m.at(i, f1);
    }
    std::vector<std::vector<LaurentPoly>> sol;
    LaurentPoly detB;
    if (!detail::cramer_solve(aug, r, sol, detB)) return naive();

    // kernel vectors: u has support pivots+f0, v has support pivots+f1
    std::vector<LaurentPoly> u(c), v(c);
    u[f0] = detB;
    v[f1] = detB;
    for (size_t k = 0; k < r; ++k) {
        u[pivot_cols[k]] = -sol[0][k];
        v[pivot_cols[k]] = -sol[1][k];
    }
    // self-check: both really are kernel vectors (else fall back)
    for (size_t i = 0; i < r; ++i) {
        LaurentPoly su, sv;
        for (size_t j = 0; j < c; ++j) {
            if (!u[j].is_zero()) su += m.at(i, j) * u[j];
            if (!v[j].is_zero()) sv += m.at(i, j) * v[j];
        }
        if (!su.is_zero() || !sv.is_zero()) return naive();
    }

    std::vector<LaurentPoly> pluecker;
    pluecker.reserve(c * (c - 1) / 2);
    for (size_t i = 0; i < c; ++i)
        for (size_t j = i + 1; j < c; ++j) pluecker.push_back(u[i] * v[j] - u[j] * v[i]);
    LaurentPoly g = gcd_many(pluecker);
    if (g.is_zero()) return naive();
    LaurentPoly scale = normalized(detB);
    if (!divides(scale, g)) return naive();
    return exact_div(g, scale);
}

inline LaurentPoly delta_of_matrix(const PresentationMatrix& m, unsigned workers = 1) {
    return delta_of_matrix(m.entries, workers);
}

// q(t) with q(xy) == p, when p lies in the subring generated by xy.
inline std::optional<LaurentPoly> xy_form(const LaurentPoly& p) {
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) {
        if (e.l != e.m) return std::nullopt;
        q.set_term({e.l, 0}, c);
    }
    return q;
}

struct DeltaResult {
    LaurentPoly delta;
    long minor_count = 0;
    std::optional<LaurentPoly> xy; // polynomial in t with t = xy
    std::string unit_ambiguity = "±x^l y^m";
};

inline DeltaResult delta(const Diagram& d, unsigned workers = 1) {
    DeltaResult res;
    res.minor_count = (long)(d.n + 1) * (d.n + 2) / 2;
    if (d.zero_unknot) {
        res.delta = LaurentPoly(1);
        res.xy = LaurentPoly(1);
        return res;
    }
    PresentationMatrix pm = build_matrix(d);
    PresentationMatrix reduced = simplify(pm);
    res.delta = delta_of_matrix(reduced.entries, workers);
    res.xy = xy_form(res.delta);
    return res;
}

// Coloring count over GF(prime) at (x0, y0): prime^nullity of the evaluated
// presentation matrix.
inline Integer colorings_mod_p(const Diagram& d, int64_t prime, int64_t x0,
                               int64_t y0) {
    size_t cols = d.rm.regions.size();
    std::vector<std::vector<int64_t>> a;
    if (!d.zero_unknot) {
        PresentationMatrix pm = build_matrix(d);
        a.assign(pm.rows(), std::vector<int64_t>(cols, 0));
        for (size_t i = 0; i < pm.rows(); ++i)
            for (size_t j = 0; j < cols; ++j)
                a[i][j] = eval_mod_p(pm.entries.at(i, j), x0, y0, prime);
    } else {
        if (x0 % prime == 0 || y0 % prime == 0)
            throw NonUnitEvaluation("x0 and y0 must be units mod p");
    }
    size_t rank = 0;
    for (size_t j = 0; j < cols && rank < a.size(); ++j) {
        size_t piv = a.size();
        for (size_t i = rank; i < a.size(); ++i)
            if (a[i][j] % prime != 0) {
                piv = i;
                break;
            }
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        int64_t inv = detail::mod_inv(((a[rank][j] % prime) + prime) % prime, prime);
        for (size_t i = rank + 1; i < a.size(); ++i) {
            int64_t factor = ((a[i][j] % prime) + prime) % prime * inv % prime;
            if (factor == 0) continue;
            for (size_t k = j; k < cols; ++k)
                a[i][k] = ((a[i][k] - factor * a[rank][k]) % prime + prime) % prime;
        }
        ++rank;
    }
    Integer count = 1;
    for (size_t k = 0; k < cols - rank; ++k) count *= prime;
    return count;
}

} // namespace tridle
