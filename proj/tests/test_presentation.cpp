#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "move_support.hpp"
#include "oracle_helpers.hpp"
#include "tridle/delta.hpp"
#include "tridle/presentation.hpp"

using namespace tridle;

namespace {
const char* kTrefoilLeft = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kTrefoilRight = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kUnknot2 = "X(3,2,4,1) X(4,2,1,3)";
const char* kTrefoilKink = "X(3,6,4,7) X(5,8,6,1) X(7,4,8,5) X(1,3,2,2)";

LaurentPoly P(const std::string& s) { return parse_poly(s); }

// column contents as a sorted multiset of rendered entries
std::multiset<std::string> column(const PresentationMatrix& m, size_t j) {
    std::multiset<std::string> out;
    for (size_t r = 0; r < m.rows(); ++r) out.insert(render(m.entries.at(r, j)));
    return out;
}
}

TEST_CASE("trefoil matrix has the regional column pattern") {
    for (const char* code : {kTrefoilLeft, kTrefoilRight}) {
        Diagram d = validate(parse_pd(code));
        PresentationMatrix m = build_matrix(d);
        REQUIRE(m.rows() == 3);
        REQUIRE(m.cols() == 5);
        int all_y = 0, all_x = 0, mixed = 0;
        for (size_t j = 0; j < 5; ++j) {
            auto col = column(m, j);
            if (col == std::multiset<std::string>{"y", "y", "y"}) ++all_y;
            else if (col == std::multiset<std::string>{"x", "x", "x"}) ++all_x;
            else if (col == std::multiset<std::string>{"0", "1", "x*y"}) ++mixed;
        }
        CHECK(all_y == 1);
        CHECK(all_x == 1);
        CHECK(mixed == 3);
    }
}

TEST_CASE("one-crossing unknot matrix") {
    Diagram d = validate(parse_pd("X(1,1,2,2)"));
    PresentationMatrix m = build_matrix(d);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 3);
    std::multiset<std::string> row;
    for (size_t j = 0; j < 3; ++j) row.insert(render(m.entries.at(0, j)));
    CHECK(row == std::multiset<std::string>{"x", "x*y + 1", "y"});
}

TEST_CASE("two-crossing unknot matrix is the parallel-poke pair") {
    Diagram d = validate(parse_pd(kUnknot2));
    PresentationMatrix m = build_matrix(d);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 4);
    for (size_t r = 0; r < 2; ++r) {
        std::multiset<std::string> row;
        for (size_t j = 0; j < 4; ++j) row.insert(render(m.entries.at(r, j)));
        CHECK(row == std::multiset<std::string>{"1", "x", "x*y", "y"});
    }
    // the bigon region column carries 1 in both rows
    int ones = 0;
    for (size_t j = 0; j < 4; ++j)
        if (column(m, j) == std::multiset<std::string>{"1", "1"}) ++ones;
    CHECK(ones == 1);
}

TEST_CASE("rows always sum to the full relation") {
    for (const char* code : {kTrefoilLeft, kFigureEight, kUnknot2, kTrefoilKink}) {
        Diagram d = validate(parse_pd(code));
        PresentationMatrix m = build_matrix(d);
        for (size_t r = 0; r < m.rows(); ++r) {
            LaurentPoly sum;
            for (size_t j = 0; j < m.cols(); ++j) sum += m.entries.at(r, j);
            CHECK(sum == P("1 + x + x*y + y"));
        }
    }
}

TEST_CASE("bigon pair reduces like the move-two proof") {
    Diagram d = validate(parse_pd(kUnknot2));
    PresentationMatrix m = build_matrix(d);

    // r1 -= r0 leaves two opposite unit entries in row 1
    PresentationMatrix step1 = transform(m, M1{1, 0, LaurentPoly(-1)});
    std::vector<size_t> nz;
    for (size_t j = 0; j < step1.cols(); ++j)
        if (!step1.entries.at(1, j).is_zero()) nz.push_back(j);
    REQUIRE(nz.size() == 2);
    REQUIRE(step1.entries.at(1, nz[0]) == -step1.entries.at(1, nz[1]));

    PresentationMatrix step2 = transform(step1, M3{1, nz[0], nz[1]});
    CHECK(step2.rows() == 1);
    CHECK(step2.cols() == 3);

    // the leftover row is a one-crossing relation; shrink it away entirely
    PresentationMatrix step3 = simplify(step2);
    CHECK(step3.rows() == 0);
    CHECK(step3.cols() == 2);
    CHECK(delta_of_matrix(step3) == LaurentPoly(1));
}

TEST_CASE("move preconditions") {
    Diagram d = validate(parse_pd(kTrefoilLeft));
    PresentationMatrix m = build_matrix(d);

    CHECK_THROWS_AS(transform(m, M1{0, 0, P("x")}), PreconditionViolated);
    CHECK_THROWS_AS(transform(m, M2{0, 0}), PreconditionViolated); // column not singly supported
    CHECK_THROWS_AS(transform(m, M3{0, 0, 1}), PreconditionViolated);
    CHECK_THROWS_AS(transform(m, M5{true, 0, 7}), PreconditionViolated);

    PresentationMatrix scaled = transform(m, M4{0, Unit{1, 1, 0}});
    PresentationMatrix back = transform(scaled, M4{0, Unit{1, -1, 0}});
    CHECK(back == m);
}

TEST_CASE("matrix moves preserve the minor gcd") {
    for (const char* code : {kTrefoilLeft, kUnknot2, kFigureEight}) {
        Diagram d = validate(parse_pd(code));
        PresentationMatrix m = build_matrix(d);
        LaurentPoly before = delta_of_matrix(m);
        for (uint64_t seed = 1; seed <= 12; ++seed) {
            PresentationMatrix t = support::random_move_sequence(m, seed, 10);
            CHECK(delta_of_matrix(t) == before);
        }
    }
}

TEST_CASE("simplify shrinks a kinked trefoil to the core matrix") {
    Diagram d = validate(parse_pd(kTrefoilKink));
    REQUIRE(d.n == 4);
    PresentationMatrix m = build_matrix(d);
    PresentationMatrix s = simplify(m);
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 5);
    CHECK(delta_of_matrix(s) ==
          delta_of_matrix(build_matrix(validate(parse_pd(kTrefoilLeft)))));
    // a fixpoint
    CHECK(simplify(s) == s);
}

TEST_CASE("simplify is order-insensitive on the corpus") {
    for (const char* code : {kTrefoilKink, kUnknot2, kFigureEight}) {
        Diagram d = validate(parse_pd(code));
        PresentationMatrix m = build_matrix(d);
        LaurentPoly expect = delta_of_matrix(simplify(m));
        for (uint64_t seed = 1; seed <= 6; ++seed)
            CHECK(delta_of_matrix(simplify(m, seed)) == expect);
    }
}

TEST_CASE("alexander polynomial against the surface-matrix oracle") {
    // genus-1 surface matrices, frozen from the standard bands
    LaurentPoly trefoil_oracle =
        normalize_univariate(oracle::seifert_alexander({{-1, 1}, {0, -1}}));
    LaurentPoly fig8_oracle =
        normalize_univariate(oracle::seifert_alexander({{1, 1}, {0, -1}}));
    CHECK(trefoil_oracle == P("x^2 - x + 1"));
    CHECK(fig8_oracle == P("x^2 - 3*x + 1"));

    CHECK(alexander_polynomial(validate(parse_pd(kTrefoilLeft))) == trefoil_oracle);
    CHECK(alexander_polynomial(validate(parse_pd(kTrefoilRight))) == trefoil_oracle);
    CHECK(alexander_polynomial(validate(parse_pd(kFigureEight))) == fig8_oracle);
    CHECK(alexander_polynomial(validate(parse_pd("X(1,1,2,2)"))) == LaurentPoly(1));
    CHECK(alexander_polynomial(Diagram::unknot0()) == LaurentPoly(1));

    CHECK_THROWS_AS(alexander_polynomial(validate(parse_pd("X(4,1,3,2) X(2,3,1,4)"))),
                    MultiComponent);
}

TEST_CASE("matrix rendering") {
    Diagram d = validate(parse_pd("X(1,1,2,2)"));
    PresentationMatrix m = build_matrix(d);
    std::string text = render_text(m);
    CHECK(text.find("x*y + 1") != std::string::npos);
    CHECK(text.find("r0") != std::string::npos);
    std::string latex = render_latex(m);
    CHECK(latex.find("\\begin{array}") != std::string::npos);
    CHECK(latex.find("xy + 1") != std::string::npos);
}
