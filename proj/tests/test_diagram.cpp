#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tridle/diagram.hpp"

using namespace tridle;

namespace {
const char* kTrefoilLeft = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kTrefoilRight = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const char* kHopf = "X(4,1,3,2) X(2,3,1,4)";
}

TEST_CASE("pd parsing") {
    PDCode pd = parse_pd(kTrefoilLeft);
    REQUIRE(pd.n() == 3);
    CHECK(pd.tuples[0] == std::array<int, 4>{1, 4, 2, 5});

    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ArityError);
    CHECK_THROWS_AS(parse_pd("X(1,1,2,2) X(1,2,3,4)"), EdgeCountError);
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), SyntaxError);
    CHECK_THROWS_AS(parse_pd(""), SyntaxError);
    CHECK_THROWS_AS(parse_pd("X(1,1,2,9)"), EdgeCountError);
}

TEST_CASE("trefoil validates") {
    Diagram d = validate(parse_pd(kTrefoilLeft));
    CHECK(d.n == 3);
    CHECK(d.components == 1);
    CHECK(d.signs == std::vector<int>{-1, -1, -1});
    CHECK(d.region_count() == 5);

    Diagram r = validate(parse_pd(kTrefoilRight));
    CHECK(r.signs == std::vector<int>{1, 1, 1});
}

TEST_CASE("region counts") {
    CHECK(validate(parse_pd("X(1,1,2,2)")).region_count() == 3);
    CHECK(validate(parse_pd(kHopf)).region_count() == 4);
    CHECK(validate(parse_pd(kFigureEight)).region_count() == 6);

    // corner bookkeeping: every (crossing, slot) lands in exactly one region
    Diagram d = validate(parse_pd(kFigureEight));
    size_t corners = 0;
    for (const auto& f : d.rm.regions) corners += f.size();
    CHECK(corners == size_t(4 * d.n));
}

TEST_CASE("kink signs and roles") {
    Diagram pos = validate(parse_pd("X(1,1,2,2)"));
    REQUIRE(pos.n == 1);
    CHECK(pos.signs[0] == 1);

    Diagram neg = validate(parse_pd("X(1,2,2,1)"));
    CHECK(neg.signs[0] == -1);

    // roles a and c share the doubled region at a kink crossing
    for (const Diagram* d : {&pos, &neg}) {
        auto roles = d->corner_labels(0);
        CHECK(roles[RoleA] == roles[RoleC]);
        CHECK(roles[RoleB] != roles[RoleA]);
        CHECK(roles[RoleD] != roles[RoleA]);
        CHECK(roles[RoleB] != roles[RoleD]);
    }
}

TEST_CASE("corner labels are a bijection onto corners") {
    for (const char* code : {kTrefoilLeft, kTrefoilRight, kFigureEight, kHopf}) {
        Diagram d = validate(parse_pd(code));
        for (int c = 0; c < d.n; ++c) {
            auto rc = role_corners(d.signs[c]);
            std::set<int> corners(rc.begin(), rc.end());
            CHECK(corners == std::set<int>{0, 1, 2, 3});
        }
    }
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(validate(parse_pd("X(1,1,2,2) X(3,3,4,4)")), Disconnected);
    // a genus-one gluing: face count 2 instead of 4
    CHECK_THROWS_AS(validate(parse_pd("X(1,3,2,4) X(2,4,3,1)")), NonPlanar);
}

TEST_CASE("orientation ambiguity and overrides") {
    // one circle lies entirely over the other: both circle orientations work
    PDCode clasp = parse_pd("X(4,2,3,1) X(3,2,4,1)");
    CHECK_THROWS_AS(validate(clasp), OrientationAmbiguous);

    Diagram a = validate(clasp, std::vector<int>{-1, 1});
    CHECK(a.signs == std::vector<int>{-1, 1});
    Diagram b = validate(clasp, std::vector<int>{1, -1});
    CHECK(b.signs == std::vector<int>{1, -1});
    CHECK_THROWS_AS(validate(clasp, std::vector<int>{1, 1}), SignConflict);

    // overrides must agree with inference when inference works
    CHECK_THROWS_AS(validate(parse_pd(kTrefoilLeft), std::vector<int>{1, 1, 1}),
                    SignConflict);
    CHECK_NOTHROW(validate(parse_pd(kTrefoilLeft), std::vector<int>{-1, -1, -1}));
}

TEST_CASE("mirror and reverse") {
    Diagram d = validate(parse_pd(kTrefoilLeft));

    Diagram m = mirror(d);
    CHECK(m.signs == std::vector<int>{1, 1, 1});
    CHECK(m.region_count() == 5);
    CHECK(isomorphic(mirror(m), d));

    Diagram r = reverse(d);
    CHECK(r.region_count() == 5);
    CHECK(r.signs == d.signs);
    CHECK(isomorphic(reverse(r), d));

    CHECK(isomorphic(m, validate(parse_pd(kTrefoilRight))));
    CHECK_FALSE(isomorphic(m, d));

    for (const char* code : {kFigureEight, kHopf}) {
        Diagram x = validate(parse_pd(code));
        CHECK(isomorphic(mirror(mirror(x)), x));
        CHECK(isomorphic(reverse(reverse(x)), x));
        CHECK(mirror(x).region_count() == x.region_count());
    }
}

TEST_CASE("zero-crossing unknot entity") {
    Diagram u0 = Diagram::unknot0();
    CHECK(u0.zero_unknot);
    CHECK(u0.n == 0);
    CHECK(u0.region_count() == 2);
    CHECK(isomorphic(u0, Diagram::unknot0()));
    CHECK_FALSE(isomorphic(u0, validate(parse_pd("X(1,1,2,2)"))));
}
