#pragma once

// Exact arithmetic in Z[x,x^-1,y,y^-1]: the coefficient ring for regional
// presentation matrices. Everything here is a value type; no floating point.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tridle/errors.hpp"

namespace tridle {

using Integer = boost::multiprecision::cpp_int;

// Exponent pair (l, m) for a monomial x^l y^m. Negative exponents allowed.
struct ExpPair {
    long l = 0;
    long m = 0;

    friend bool operator==(const ExpPair& a, const ExpPair& b) {
        return a.l == b.l && a.m == b.m;
    }
};

// Graded-lexicographic order with x > y. Fixed once; all canonical forms
// and golden values assume it.
struct GrlexLess {
    bool operator()(const ExpPair& a, const ExpPair& b) const {
        long ga = a.l + a.m, gb = b.l + b.m;
        if (ga != gb) return ga < gb;
        if (a.l != b.l) return a.l < b.l;
        return a.m < b.m;
    }
};

// A monomial unit: sign * x^l * y^m.
struct Unit {
    int sign = 1;
    long l = 0;
    long m = 0;

    friend bool operator==(const Unit& a, const Unit& b) {
        return a.sign == b.sign && a.l == b.l && a.m == b.m;
    }
};

class LaurentPoly {
  public:
    using Terms = std::map<ExpPair, Integer, GrlexLess>;

    LaurentPoly() = default;
    LaurentPoly(long c) { set_term({0, 0}, Integer(c)); }
    LaurentPoly(const Integer& c) { set_term({0, 0}, c); }

    static LaurentPoly term(Integer c, long l, long m) {
        LaurentPoly p;
        p.set_term({l, m}, std::move(c));
        return p;
    }

    static LaurentPoly x(long e = 1) { return term(1, e, 0); }
    static LaurentPoly y(long e = 1) { return term(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
               terms_.begin()->second == 1;
    }
    // Single-term polynomials are exactly the units of the Laurent ring.
    bool is_unit() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // Leading term under graded-lex.
    const std::pair<const ExpPair, Integer>& leading() const {
        return *terms_.rbegin();
    }

    Integer coeff(long l, long m) const {
        auto it = terms_.find({l, m});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void set_term(ExpPair e, Integer c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    void add_term(const ExpPair& e, const Integer& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
        p += q;
        return p;
    }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
        p -= q;
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly r;
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_)
                r.add_term({ep.l + eq.l, ep.m + eq.m}, cp * cq);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& q) {
        *this = *this * q;
        return *this;
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) {
        return !(p == q);
    }

    // Total order for use as a container key; grlex on term lists.
    friend bool operator<(const LaurentPoly& p, const LaurentPoly& q) {
        auto a = p.terms_.rbegin(), b = q.terms_.rbegin();
        GrlexLess less;
        for (; a != p.terms_.rend() && b != q.terms_.rend(); ++a, ++b) {
            if (less(a->first, b->first)) return true;
            if (less(b->first, a->first)) return false;
            if (a->second != b->second) return a->second < b->second;
        }
        return b != q.terms_.rend();
    }

    ExpPair min_exponents() const {
        ExpPair mn{0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first) {
                mn = e;
                first = false;
            } else {
                mn.l = std::min(mn.l, e.l);
                mn.m = std::min(mn.m, e.m);
            }
        }
        return mn;
    }

    LaurentPoly shifted(long dl, long dm) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[{e.l + dl, e.m + dm}] = c;
        return r;
    }

  private:
    Terms terms_;
};

inline LaurentPoly operator*(const Unit& u, const LaurentPoly& p) {
    LaurentPoly s = p.shifted(u.l, u.m);
    return u.sign < 0 ? -s : s;
}

// Canonical representative in the orbit of multiplication by +-x^l y^m:
// minimum x-exponent 0, minimum y-exponent 0, positive leading coefficient.
// Returns (normalized, unit) with input == unit * normalized.
inline std::pair<LaurentPoly, Unit> unit_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return {p, Unit{}};
    ExpPair mn = p.min_exponents();
    LaurentPoly q = p.shifted(-mn.l, -mn.m);
    Unit u{1, mn.l, mn.m};
    if (q.leading().second < 0) {
        q = -q;
        u.sign = -1;
    }
    return {q, u};
}

inline LaurentPoly normalized(const LaurentPoly& p) {
    return unit_normalize(p).first;
}

namespace detail {

// Exact division of ordinary (non-negative exponent) polynomials by
// graded-lex leading-term reduction. Both inputs nonzero.
inline bool poly_div_exact(const LaurentPoly& p, const LaurentPoly& q,
                           LaurentPoly& out) {
    out = LaurentPoly();
    LaurentPoly r = p;
    const auto& qlead = q.leading();
    while (!r.is_zero()) {
        const auto& rlead = r.leading();
        long dl = rlead.first.l - qlead.first.l;
        long dm = rlead.first.m - qlead.first.m;
        if (dl < 0 || dm < 0) return false;
        Integer c = rlead.second / qlead.second;
        if (c * qlead.second != rlead.second) return false;
        LaurentPoly t = LaurentPoly::term(c, dl, dm);
        out += t;
        r -= t * q;
    }
    return true;
}

} // namespace detail

// Exact division in the Laurent ring: returns r with r*q == p, or throws.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw DivisionByZero("exact_div by zero polynomial");
    if (p.is_zero()) return LaurentPoly();
    ExpPair mp = p.min_exponents(), mq = q.min_exponents();
    LaurentPoly P = p.shifted(-mp.l, -mp.m);
    LaurentPoly Q = q.shifted(-mq.l, -mq.m);
    LaurentPoly r;
    if (!detail::poly_div_exact(P, Q, r))
        throw NotDivisible("quotient does not exist in Z[x,x^-1,y,y^-1]");
    return r.shifted(mp.l - mq.l, mp.m - mq.m);
}

inline bool divides(const LaurentPoly& q, const LaurentPoly& p) {
    if (q.is_zero()) return p.is_zero();
    if (p.is_zero()) return true;
    ExpPair mp = p.min_exponents(), mq = q.min_exponents();
    LaurentPoly r;
    return detail::poly_div_exact(p.shifted(-mp.l, -mp.m),
                                  q.shifted(-mq.l, -mq.m), r);
}

namespace detail {

// --- univariate layer: Z[y] as dense coefficient vectors -------------------

using UPoly = std::vector<Integer>; // coeff[i] multiplies y^i; no trailing zeros

inline void utrim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UPoly uneg(UPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

inline UPoly uscale(const UPoly& a, const Integer& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

inline UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

inline Integer ucontent(const UPoly& a) {
    Integer g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g; // gcd() is non-negative
}

inline UPoly udiv_int(const UPoly& a, const Integer& d) {
    UPoly r = a;
    for (auto& c : r) c /= d;
    return r;
}

inline UPoly uprimitive(const UPoly& a) {
    if (a.empty()) return a;
    Integer c = ucontent(a);
    UPoly r = udiv_int(a, c);
    if (r.back() < 0)
        for (auto& v : r) v = -v;
    return r;
}

// Pseudo-remainder of a by b: lc(b)^(da-db+1) * a reduced mod b.
inline UPoly uprem(UPoly a, const UPoly& b) {
    int db = udeg(b);
    Integer lb = b.back();
    while (udeg(a) >= db) {
        int da = udeg(a);
        Integer la = a.back();
        UPoly shifted(da - db, 0);
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = usub(uscale(a, lb), uscale(shifted, la));
    }
    return a;
}

inline UPoly ucanon(UPoly a) {
    if (!a.empty() && a.back() < 0)
        for (auto& v : a) v = -v;
    return a;
}

// Primitive PRS gcd in Z[y]; positive leading coefficient, integer content
// of the inputs preserved (gcd(0, b) keeps the content of b).
inline UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    if (a.empty()) return ucanon(b);
    if (b.empty()) return ucanon(a);
    Integer ca = ucontent(a), cb = ucontent(b);
    Integer cg = boost::multiprecision::gcd(ca, cb);
    a = udiv_int(a, ca);
    b = udiv_int(b, cb);
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = uprimitive(uprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    a = uprimitive(a);
    return uscale(a, cg);
}

inline bool uis_one(const UPoly& a) { return a.size() == 1 && a[0] == 1; }

// --- bivariate layer: Z[x,y] as x-dense vectors of Z[y] --------------------

using BPoly = std::vector<UPoly>; // b[i] is the y-polynomial at x^i

inline void btrim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

inline int bdeg(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

inline BPoly from_poly(const LaurentPoly& p) {
    BPoly b;
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<size_t>(e.l) >= b.size()) b.resize(e.l + 1);
        UPoly& u = b[e.l];
        if (static_cast<size_t>(e.m) >= u.size()) u.resize(e.m + 1);
        u[e.m] = c;
    }
    for (auto& u : b) utrim(u);
    btrim(b);
    return b;
}

inline LaurentPoly to_poly(const BPoly& b) {
    LaurentPoly p;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j)
            if (b[i][j] != 0) p.set_term({(long)i, (long)j}, b[i][j]);
    return p;
}

inline BPoly bmul_u(const BPoly& a, const UPoly& s) {
    BPoly r = a;
    for (auto& u : r) u = umul(u, s);
    btrim(r);
    return r;
}

inline BPoly bsub(BPoly a, const BPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = usub(a[i], b[i]);
    btrim(a);
    return a;
}

inline UPoly bcontent(const BPoly& a) {
    UPoly g;
    for (const auto& u : a) g = ugcd(g, u);
    return g;
}

inline BPoly bdiv_u(const BPoly& a, const UPoly& d) {
    // exact division of every x-coefficient by d in Z[y]
    BPoly r = a;
    for (auto& u : r) {
        if (u.empty()) continue;
        UPoly q, rem = u;
        q.assign(u.size(), Integer(0));
        // classic exact division; d divides u by construction
        while (!rem.empty()) {
            int k = udeg(rem) - udeg(d);
            Integer c = rem.back() / d.back();
            q[k] = c;
            UPoly t(k, 0);
            t.insert(t.end(), d.begin(), d.end());
            rem = usub(rem, uscale(t, c));
        }
        utrim(q);
        u = std::move(q);
    }
    btrim(r);
    return r;
}

inline BPoly bprimitive(const BPoly& a) {
    if (a.empty()) return a;
    return bdiv_u(a, bcontent(a));
}

inline BPoly bprem(BPoly a, const BPoly& b) {
    int db = bdeg(b);
    const UPoly& lb = b.back();
    while (bdeg(a) >= db && !a.empty()) {
        int da = bdeg(a);
        UPoly la = a.back();
        BPoly shifted(da - db);
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = bsub(bmul_u(a, lb), bmul_u(shifted, la));
    }
    return a;
}

} // namespace detail

// GCD in the Laurent ring; always returns the canonical (unit-normalized)
// representative. Treats the polynomial as univariate in x over Z[y] and
// runs a primitive PRS; content in y handles the second variable.
inline LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
    using namespace detail;
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);
    LaurentPoly pn = normalized(p), qn = normalized(q);
    if (pn.is_one() || qn.is_one()) return LaurentPoly(1);
    if (pn == qn) return pn;
    BPoly a = from_poly(pn), b = from_poly(qn);
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly cg = ugcd(ca, cb);
    LaurentPoly result;
    if (bdeg(a) == 0 || bdeg(b) == 0) {
        // one side is free of x: gcd is a pure y-content gcd
        BPoly r(1);
        r[0] = cg;
        result = to_poly(r);
    } else {
        a = bdiv_u(a, ca);
        b = bdiv_u(b, cb);
        if (bdeg(a) < bdeg(b)) std::swap(a, b);
        while (!b.empty()) {
            BPoly r = bprimitive(bprem(a, b));
            a = std::move(b);
            b = std::move(r);
        }
        result = to_poly(bmul_u(bprimitive(a), cg));
    }
    return normalized(result);
}

// Left fold with early exit once the accumulator collapses to 1.
inline LaurentPoly gcd_many(const std::vector<LaurentPoly>& ps) {
    LaurentPoly acc;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        acc = acc.is_zero() ? normalized(p) : gcd(acc, p);
        if (acc.is_one()) return acc;
    }
    return acc;
}

// --- dense matrices of Laurent polynomials ---------------------------------

class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    LaurentPoly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<LaurentPoly> a_;
};

// Exact determinant by Bareiss fraction-free elimination. Pivot rows are
// chosen by fewest-term nonzero entry; swaps tracked in the sign.
inline LaurentPoly det(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw ShapeError("determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    PolyMatrix w = m;
    LaurentPoly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t best = n;
        for (size_t i = k; i < n; ++i) {
            if (w.at(i, k).is_zero()) continue;
            if (best == n ||
                w.at(i, k).term_count() < w.at(best, k).term_count())
                best = i;
        }
        if (best == n) return LaurentPoly();
        if (best != k) {
            for (size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(best, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = exact_div(
                    w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
            w.at(i, k) = LaurentPoly();
        }
        prev = w.at(k, k);
    }
    return sign < 0 ? -w.at(n - 1, n - 1) : w.at(n - 1, n - 1);
}

// --- evaluation over a prime field -----------------------------------------

namespace detail {

inline int64_t mod_pow(int64_t base, int64_t exp, int64_t p) {
    int64_t r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        exp >>= 1;
    }
    return r;
}

inline int64_t mod_inv(int64_t a, int64_t p) { return mod_pow(a, p - 2, p); }

} // namespace detail

// Value of p at (x0, y0) over GF(prime). x0, y0 must be nonzero residues
// since negative exponents occur.
inline int64_t eval_mod_p(const LaurentPoly& p, int64_t x0, int64_t y0,
                          int64_t prime) {
    x0 %= prime;
    y0 %= prime;
    if (x0 < 0) x0 += prime;
    if (y0 < 0) y0 += prime;
    if (x0 == 0 || y0 == 0)
        throw NonUnitEvaluation("x0 and y0 must be units mod p");
    int64_t xi = detail::mod_inv(x0, prime);
    int64_t yi = detail::mod_inv(y0, prime);
    int64_t acc = 0;
    for (const auto& [e, c] : p.terms()) {
        int64_t cv = static_cast<int64_t>(c % prime);
        if (cv < 0) cv += prime;
        int64_t xv = e.l >= 0 ? detail::mod_pow(x0, e.l, prime)
                              : detail::mod_pow(xi, -e.l, prime);
        int64_t yv = e.m >= 0 ? detail::mod_pow(y0, e.m, prime)
                              : detail::mod_pow(yi, -e.m, prime);
        acc = (acc + (__int128)cv * xv % prime * yv) % prime;
    }
    return acc;
}

// --- text rendering and parsing ---------------------------------------------

// Terms in graded-lex descending order, e.g. "x^3*y^3 + 1"; negative
// exponents rendered as "x^-1".
inline std::string render(const LaurentPoly& p, const std::string& xname = "x",
                          const std::string& yname = "y") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        if (e.l != 0 && !xname.empty()) {
            vars += xname;
            if (e.l != 1) vars += "^" + std::to_string(e.l);
        }
        if (e.m != 0 && !yname.empty()) {
            if (!vars.empty()) vars += "*";
            vars += yname;
            if (e.m != 1) vars += "^" + std::to_string(e.m);
        }
        if (vars.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += vars;
        }
    }
    return out;
}

inline std::string render_latex(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string vars;
        if (e.l != 0)
            vars += e.l == 1 ? "x" : "x^{" + std::to_string(e.l) + "}";
        if (e.m != 0)
            vars += e.m == 1 ? "y" : "y^{" + std::to_string(e.m) + "}";
        if (vars.empty())
            out += mag.str();
        else
            out += (mag != 1 ? mag.str() : "") + vars;
    }
    return out;
}

inline std::string render(const Unit& u) {
    std::string out = u.sign < 0 ? "-" : "";
    std::string vars;
    if (u.l != 0) vars += "x" + (u.l != 1 ? "^" + std::to_string(u.l) : "");
    if (u.m != 0) {
        if (!vars.empty()) vars += "*";
        vars += "y" + (u.m != 1 ? "^" + std::to_string(u.m) : "");
    }
    return out + (vars.empty() ? "1" : vars);
}

// Parses the rendered grammar (and tolerates omitted '*').
inline LaurentPoly parse_poly(const std::string& text) {
    LaurentPoly p;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    auto parse_int = [&]() -> long {
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
            throw SyntaxError("expected integer at offset " + std::to_string(i));
        long v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            v = v * 10 + (text[i++] - '0');
        return neg ? -v : v;
    };
    skip_ws();
    if (i == text.size()) throw SyntaxError("empty polynomial");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (!any && text[i] == '+') {
            } // leading plus is fine
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw SyntaxError("expected '+' or '-' at offset " +
                              std::to_string(i));
        }
        Integer coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit((unsigned char)text[i])) {
            std::string num;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                num += text[i++];
            coeff = Integer(num);
            saw_digits = true;
        }
        long le = 0, me = 0;
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i < text.size() && (text[i] == 'x' || text[i] == 'y')) {
                char v = text[i++];
                long e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = parse_int();
                }
                (v == 'x' ? le : me) += e;
                saw_var = true;
            } else {
                break;
            }
        }
        if (!saw_digits && !saw_var)
            throw SyntaxError("expected term at offset " + std::to_string(i));
        p.add_term({le, me}, sign < 0 ? Integer(-coeff) : coeff);
        any = true;
    }
    return p;
}

} // namespace tridle
