#include <doctest.h>

#include "seqcomb/parse.hpp"
#include "seqcomb/ravg.hpp"

using namespace seqcomb;

static Ordinal O(const std::string& s) { return parse_ordinal(s); }

TEST_CASE("first-level average spreads mass over one maximal block") {
    ProbMeasure mu = repeated_average(O("1"), SetGen{{}, 3, 1}, 1);
    CHECK(to_string(mu) == "{3:1/3,4:1/3,5:1/3}");
    CHECK(mu.mass() == 1);
    CHECK(mu.support() == FinSet{3, 4, 5});
    CHECK(mu({3, 4}) == Rat(2, 3));
    CHECK(mu({7}) == 0);
}

TEST_CASE("level zero averages are point masses") {
    ProbMeasure mu = repeated_average(Ordinal{}, SetGen{{2, 5}, 9, 3}, 3);
    CHECK(to_string(mu) == "{9:1}");
}

TEST_CASE("limit-level averages resolve through the fundamental sequence") {
    ProbMeasure mu = repeated_average(O("w"), SetGen{{}, 1, 1}, 1);
    CHECK(to_string(mu) == "{1:1}");
    CHECK(repeated_average(O("w"), SetGen{{}, 1, 1}, 2).mass() == 1);
}

TEST_CASE("averages have mass one and live on the n-th maximal block") {
    // Block minima grow fast with the level, so keep n small at higher xi.
    SetGen m{{}, 2, 1};
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(repeated_average(O("1"), m, n).mass() == 1);
        CHECK(support_check(O("1"), m, n));
    }
    for (unsigned n = 1; n <= 2; ++n) {
        CHECK(repeated_average(O("2"), m, n).mass() == 1);
        CHECK(support_check(O("2"), m, n));
    }
    // At limit levels start from 1 so the first maximal block stays tiny.
    CHECK(repeated_average(O("w"), m, 1).mass() == 1);
    CHECK(support_check(O("w"), SetGen{{}, 1, 1}, 1));
}

TEST_CASE("averages are reproduced on any set extending their supports") {
    SetGen m{{}, 3, 1};
    CHECK(permanence_check(O("1"), m, {1, 2}, m));
    CHECK(permanence_check(O("2"), m, {1}, m));
    CHECK_THROWS_AS(permanence_check(O("1"), m, {2, 1}, m),
                    std::invalid_argument);
    CHECK_THROWS_AS(permanence_check(O("1"), m, {1}, SetGen{{}, 5, 1}),
                    std::invalid_argument);
}

TEST_CASE("largest member mass under a measure") {
    ProbMeasure mu = repeated_average(O("1"), SetGen{{}, 3, 1}, 1);
    CHECK(measure_max(parse_family("S(1)"), mu) == 1);
    CHECK(measure_max(parse_family("A(1)"), mu) == Rat(1, 3));
    CHECK(measure_max(parse_family("A(2)"), mu) == Rat(2, 3));
}
