#include <doctest.h>

#include "seqcomb/norms.hpp"
#include "seqcomb/parse.hpp"

using namespace seqcomb;

static Vec V(const std::string& s) { return parse_vector(s); }

TEST_CASE("schreier-type norm picks the heaviest admissible set") {
    auto s1 = parse_family("S(1)");
    CHECK(schreier_norm(s1, V("[1:1,2:1,3:1,4:1]")) == 2);
    CHECK(schreier_norm(s1, V("[1:5]")) == 5);
    CHECK(schreier_norm(parse_family("A(1)"), V("[1:-3,2:2]")) == 3);
}

TEST_CASE("summed-block norm with p = 1 adds successive admissible blocks") {
    auto got = baernstein_norm(parse_family("S(1)"), PNorm::one, V("[1:1,2:1]"));
    CHECK(got.exact());
    CHECK(got.lo == 2);
}

TEST_CASE("summed-block norm with p = inf matches the max-block norm") {
    auto s1 = parse_family("S(1)");
    for (const char* xs : {"[1:1,2:1,3:1,4:1]", "[2:1/2,3:-1,5:3/4]", "[1:2]"}) {
        auto got = baernstein_norm(s1, PNorm::inf, V(xs));
        CHECK(got.exact());
        CHECK(got.lo == schreier_norm(s1, V(xs)));
    }
}

TEST_CASE("square root enclosures are certified and tight") {
    auto e = sqrt_enclosure(Rat(9, 4), Rat(1, 1000));
    CHECK(e.lo == Rat(3, 2));
    CHECK(e.hi == Rat(3, 2));
    auto f = sqrt_enclosure(Rat(2), Rat(1, 1000000));
    CHECK(f.lo <= f.hi);
    CHECK(f.hi - f.lo <= Rat(1, 1000000));
    CHECK(f.lo * f.lo <= 2);
    CHECK(2 <= f.hi * f.hi);
}

TEST_CASE("mixed norm takes the best weighted layer") {
    auto mixed = parse_spec("mixed(base=S(1),theta=1/2)");
    CHECK(mixed_norm(mixed, V("[1:1,2:1,3:1]")) == 1);
    auto sn = space_norm(parse_spec("schreier(S(1))"), V("[1:1,2:1,3:1,4:1]"));
    CHECK(sn.exact());
    CHECK(sn.lo == 2);
}

TEST_CASE("window-maximal members enumerate correctly") {
    auto s1 = parse_family("S(1)");
    auto got = maximal_members_within(s1, {1, 2, 3, 4});
    std::vector<FinSet> want{{1}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(got == want);
}

TEST_CASE("norm functionals describe the norm on nonnegative vectors") {
    auto fs = norm_functionals(parse_spec("schreier(S(1))"), {1, 2, 3});
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].scale == 1);
    CHECK(fs[0].support == FinSet{1});
    CHECK(fs[1].support == FinSet{2, 3});
}

TEST_CASE("convex combinations over a set have a computable minimal norm") {
    auto sspec = parse_spec("schreier(S(1))");
    CHECK(bset_min_norm(sspec, {1, 2, 3}) == Rat(1, 2));
    CHECK(bset_member(sspec, Rat(1, 2), {1, 2, 3}));
    CHECK_FALSE(bset_member(sspec, Rat(2, 3), {1, 2, 3}));
}

TEST_CASE("tolerance-certified membership for the euclidean aggregate") {
    auto b2 = parse_spec("baernstein(S(0),p=2)");
    CHECK(bset_member(b2, Rat(1, 2), {1, 2, 3}));
    CHECK_FALSE(bset_member(b2, Rat(1, 2), {1, 2, 3, 4, 5}));
}

TEST_CASE("window probes report hereditary and spreading structure") {
    auto wr = bset_family_probe(parse_spec("schreier(S(1))"), Rat(1, 2), 5);
    CHECK(wr.window == 5);
    CHECK(wr.members.size() == 27);
    CHECK(wr.hereditary);
    CHECK(wr.spreading);
    CHECK(wr.rank_lb == 4);

    auto aw = analyze_window(3, {{1}, {2}, {3}, {2, 3}});
    CHECK(aw.hereditary);
    CHECK(aw.spreading);
}
