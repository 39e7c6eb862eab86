#include <doctest.h>

#include <string>

#include "seqcomb/parse.hpp"

using namespace seqcomb;

TEST_CASE("rationals") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("index sets and generated sets") {
    CHECK(parse_finset("[2,5,9]") == FinSet{2, 5, 9});
    CHECK(parse_finset("[]") == FinSet{});
    CHECK_THROWS_AS(parse_finset("[5,2]"), std::invalid_argument);

    SetGen g = parse_setgen("gen(prefix=[3,4],start=6,step=2)");
    CHECK(g.nth(1) == 3);
    CHECK(g.nth(3) == 6);
    CHECK(g.nth(4) == 8);
    CHECK(g.index_of(8) == 4u);
    CHECK_FALSE(g.index_of(7).has_value());
    CHECK(parse_setgen("gen(start=2,step=2)").nth(2) == 4);
    CHECK_THROWS_AS(parse_setgen("gen(prefix=[5],start=3)"),
                    std::invalid_argument);
}

TEST_CASE("vectors and measures") {
    Vec v = parse_vector("[1:1,2:-1/2]");
    CHECK(v.size() == 2);
    CHECK(v[1] == 1);
    CHECK(v[2] == Rat(-1, 2));
    CHECK(to_string(parse_vector(to_string(v))) == to_string(v));

    ProbMeasure mu = parse_measure("{3:1/3,4:1/3,5:1/3}");
    CHECK(mu.mass() == 1);
    CHECK(to_string(mu) == "{3:1/3,4:1/3,5:1/3}");
}

TEST_CASE("family expressions round trip") {
    for (const char* s : {"A(2)", "S(1)", "S(w^{2}+1)", "comb(A(2),S(1))",
                          "drv(S(1),w)"}) {
        auto g = parse_family(s);
        CHECK(to_string(parse_family(to_string(g))) == to_string(g));
    }
    CHECK_THROWS_AS(parse_family("B(2)"), std::invalid_argument);
}

TEST_CASE("space specifications round trip") {
    for (const char* s :
         {"schreier(S(1))", "baernstein(S(1),p=2)", "baernstein(A(3),p=inf)",
          "mixed(base=A(2),theta=1/2)",
          "mixed(layers=[(S(0),1),(S(1),1/2)])"}) {
        auto spec = parse_spec(s);
        CHECK(to_string(parse_spec(to_string(spec))) == to_string(spec));
    }
    CHECK_THROWS_AS(parse_spec("mixed(base=A(2),theta=2)"),
                    std::invalid_argument);
}

TEST_CASE("errors carry the offending position") {
    for (const char* s : {"w^{2", "[1,2", "schreier(S(1)"}) {
        try {
            if (s[0] == 'w')
                parse_ordinal(s);
            else if (s[0] == '[')
                parse_finset(s);
            else
                parse_spec(s);
            CHECK_MESSAGE(false, "expected a parse failure");
        } catch (const std::invalid_argument& ex) {
            CHECK(std::string(ex.what()).find("position") != std::string::npos);
        }
    }
}

TEST_CASE("trailing input is rejected") {
    CHECK_THROWS_AS(parse_ordinal("w+1 junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector("[1:1]x"), std::invalid_argument);
}
