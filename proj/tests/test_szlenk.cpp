#include <doctest.h>

#include "seqcomb/parse.hpp"
#include "seqcomb/szlenk.hpp"

using namespace seqcomb;

static Ordinal O(const std::string& s) { return parse_ordinal(s); }

TEST_CASE("index bounds for a geometric mixed space") {
    auto mixed = parse_spec("mixed(base=S(1),theta=1/2)");
    CHECK(szlenk_lower(mixed, Rat(1, 8)) == O("w^{3}+1"));
    CHECK(szlenk_upper(mixed, Rat(1, 8)) == O("w^{3}+1"));
    CHECK(szlenk_lower(mixed, Rat(1, 2)) == O("w+1"));
    CHECK(szlenk_upper(mixed, Rat(1, 2)) == O("w+1"));
    CHECK_THROWS_AS(szlenk_lower(mixed, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(szlenk_lower(parse_spec("schreier(S(1))"), Rat(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("functional families need strictly decreasing weights") {
    auto s1 = parse_family("S(1)");
    CHECK_THROWS_AS(
        functional_family({{s1, Rat(1, 2)}, {s1, Rat(1, 2)}}),
        std::invalid_argument);
    auto mixed = parse_spec("mixed(base=S(1),theta=1/2)");
    auto ff = functional_family_of(mixed, Rat(1, 4), 8);
    CHECK(ff.layers.size() == 6);  // weights below eps/window are dropped
}

TEST_CASE("membership in the functional-splitting family") {
    auto mixed = parse_spec("mixed(base=S(1),theta=1/2)");
    auto ff = functional_family_of(mixed, Rat(1, 4), 4);
    CHECK(h_member(mixed, ff, Rat(1, 4), {}));
    CHECK(h_member(mixed, ff, Rat(1, 4), {1}));
    CHECK(h_member(mixed, ff, Rat(1, 4), {2, 5}));
    CHECK_FALSE(h_member(mixed, ff, Rat(2), {1}));
    CHECK_THROWS_AS(h_member(mixed, ff, Rat(1, 4), {5, 2}),
                    std::invalid_argument);
}

TEST_CASE("sandwich probe reports a structured window and ordinal bounds") {
    auto mixed = parse_spec("mixed(base=S(1),theta=1/2)");
    auto ff = functional_family_of(mixed, Rat(1, 4), 4);
    auto rep = h_sandwich_probe(mixed, ff, Rat(1, 4), 4);
    CHECK(rep.window.members.size() == 8);
    CHECK(rep.window.hereditary);
    CHECK(rep.window.spreading);
    CHECK(rep.lower_at_5eps == O("1"));
    CHECK(rep.upper_at_half_eps_doubled == O("w^{3}*2+1"));
    CHECK(rep.lower_at_5eps <= rep.upper_at_half_eps_doubled);
}

TEST_CASE("power-bound condition on a table of index values") {
    CHECK(factorization_condition(
        O("w"), O("w^{2}"), {{1, O("w^{2}")}, {2, O("w^{4}")}}));
    CHECK_FALSE(factorization_condition(O("1"), O("w"), {}));  // gamma too big
    CHECK_FALSE(factorization_condition(
        O("w"), O("w^{2}"), {{2, O("w^{5}")}}));  // exceeds gamma^2
    CHECK_THROWS_AS(factorization_condition(Ordinal{}, O("1"), {}),
                    std::invalid_argument);
}

TEST_CASE("summed-series constant certifies within tolerance") {
    Rat c = factorization_constant(0, 1, Rat(2), Rat(4), Rat(1, 1000000));
    CHECK(c == Rat(765251, 40000));
    // Doubling the scale prefactor doubles every term of the series.
    Rat c1 = factorization_constant(1, 1, Rat(2), Rat(4), Rat(1, 1000000));
    CHECK(c1 >= 2 * c - Rat(1, 1000000));
    CHECK(c1 <= 2 * c + Rat(2, 1000000));
    CHECK_THROWS_AS(factorization_constant(0, 1, Rat(4), Rat(2), Rat(1, 1000)),
                    std::domain_error);
    CHECK_THROWS_AS(factorization_constant(0, 1, Rat(1), Rat(4), Rat(1, 1000)),
                    std::invalid_argument);
}
