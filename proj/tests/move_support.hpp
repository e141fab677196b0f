#pragma once

// Shared helpers for matrix-move fuzzing and the naive minor pipeline.

#include <random>
#include <vector>

#include "oracle_helpers.hpp"
#include "tridle/presentation.hpp"

namespace support {

using namespace tridle;

// gcd of all maximal minors computed the slow way: cofactor determinants
// folded through the independent gcd.
inline LaurentPoly naive_delta(const PolyMatrix& m) {
    const size_t r = m.rows(), c = m.cols();
    if (c < r) throw ShapeError("naive_delta: bad shape");
    if (r == 0) return LaurentPoly(1);
    std::vector<size_t> keep(r);
    LaurentPoly acc;
    // iterate over kept column subsets
    for (size_t i = 0; i < r; ++i) keep[i] = i;
    for (;;) {
        PolyMatrix sq(r, r);
        for (size_t j = 0; j < r; ++j)
            for (size_t i = 0; i < r; ++i) sq.at(i, j) = m.at(i, keep[j]);
        LaurentPoly d = oracle::naive_det(sq);
        if (!d.is_zero())
            acc = acc.is_zero() ? normalized(d) : oracle::naive_gcd(acc, d);
        // next combination
        size_t k = r;
        while (k > 0 && keep[k - 1] == c - r + k - 1) --k;
        if (k == 0) break;
        ++keep[k - 1];
        for (size_t j = k; j < r; ++j) keep[j] = keep[j - 1] + 1;
    }
    return acc;
}

// A random valid M1..M5 move drawn from the kinds of steps the equivalence
// proofs use: row combinations with monomial multiples, unit row scalings,
// swaps, and the unit-entry shrink moves when their sites exist.
inline PresentationMatrix random_move_sequence(PresentationMatrix m,
                                               uint64_t seed, int length) {
    std::mt19937_64 rng(seed);
    auto unit_pool = [&]() -> LaurentPoly {
        static const long exps[][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1},
                                       {-1, 0}, {0, -1}, {-1, -1}, {1, -1}};
        long sign = (rng() & 1) ? 1 : -1;
        auto& e = exps[rng() % 8];
        return LaurentPoly::term(sign, e[0], e[1]);
    };
    for (int step = 0; step < length; ++step) {
        size_t R = m.rows(), C = m.cols();
        int kind = (int)(rng() % 6);
        if (kind == 0 && R >= 2) { // M1
            size_t i = rng() % R, j = rng() % R;
            if (i == j) continue;
            m = transform(m, M1{i, j, unit_pool()});
        } else if (kind == 1) { // M2 where a site exists
            bool done = false;
            for (size_t j = 0; j < C && !done; ++j) {
                size_t nz = 0, row = 0;
                for (size_t r = 0; r < R; ++r)
                    if (!m.entries.at(r, j).is_zero()) { ++nz; row = r; }
                if (nz == 1 && m.entries.at(row, j).is_unit() && R >= 1) {
                    m = transform(m, M2{row, j});
                    done = true;
                }
            }
        } else if (kind == 2) { // M3 with unit entries where a site exists
            bool done = false;
            for (size_t r = 0; r < R && !done; ++r) {
                std::vector<size_t> nz;
                for (size_t j = 0; j < C; ++j)
                    if (!m.entries.at(r, j).is_zero()) nz.push_back(j);
                if (nz.size() == 2 && m.entries.at(r, nz[0]).is_unit() &&
                    m.entries.at(r, nz[0]) == -m.entries.at(r, nz[1])) {
                    m = transform(m, M3{r, nz[0], nz[1]});
                    done = true;
                }
            }
        } else if (kind == 3 && R >= 1) { // M4
            size_t i = rng() % R;
            LaurentPoly u = unit_pool();
            const auto& [e, cf] = u.leading();
            m = transform(m, M4{i, Unit{cf < 0 ? -1 : 1, e.l, e.m}});
        } else if (kind == 4 && R >= 2) { // M5 rows
            m = transform(m, M5{true, rng() % R, rng() % R});
        } else if (C >= 2) { // M5 cols
            m = transform(m, M5{false, rng() % C, rng() % C});
        }
    }
    return m;
}

} // namespace support
