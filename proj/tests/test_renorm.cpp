#include <doctest.h>

#include "seqcomb/parse.hpp"
#include "seqcomb/renorm.hpp"

using namespace seqcomb;

static Vec V(const std::string& s) { return parse_vector(s); }

TEST_CASE("dual norm of the sup-type spaces") {
    auto s0 = parse_spec("schreier(S(0))");  // sup norm, dual is the sum
    CHECK(dual_norm(s0, V("[1:1,2:1]")) == 2);
    CHECK(dual_norm(s0, V("[1:1/2,4:-3]")) == Rat(7, 2));
    auto s1 = parse_spec("schreier(S(1))");
    CHECK(dual_norm(s1, V("[1:1,2:1]")) == 2);
    CHECK(dual_norm(s1, V("[2:1,3:1]")) == 1);
}

TEST_CASE("decomposition sup norm over interval chunkings") {
    auto s0 = parse_spec("schreier(S(0))");
    auto s1 = parse_spec("schreier(S(1))");
    auto v = vee_norm(FddBlocking{s0}, s1, V("[1:1,2:1,3:1]"));
    CHECK(v.exact());
    CHECK(v.lo == 2);
}

TEST_CASE("decomposition inf bracket over full partitions") {
    auto s0 = parse_spec("schreier(S(0))");
    auto s1 = parse_spec("schreier(S(1))");
    auto w = wedge_bracket(FddBlocking{s0}, s1, V("[1:1,2:1,3:1]"));
    CHECK(w.exact());
    CHECK(w.lo == 1);

    auto wb = wedge_norm_bounds(FddBlocking{s0}, s1, V("[1:1,2:1,3:1]"), 3);
    CHECK(wb.lower <= wb.upper);
    CHECK(wb.lower == 1);
    CHECK(wb.upper == 1);
}

TEST_CASE("pairings are controlled by dual bracket times primal sup") {
    auto s0 = parse_spec("schreier(S(0))");
    auto s1 = parse_spec("schreier(S(1))");
    CHECK(duality_pairing_check(FddBlocking{s0}, s1, V("[1:1,2:1,3:1]"),
                                V("[1:1/3,2:1/3,3:1/3]")));
    CHECK(duality_pairing_check(FddBlocking{s0}, s1, V("[1:1,3:-1/2]"),
                                V("[2:2,3:1]")));
}

TEST_CASE("block seminorm bounds bracket each other") {
    auto s1 = parse_spec("schreier(S(1))");
    SetGen m{{}, 2, 2};
    Vec a = V("[1:1,2:1]");
    Rat lb = block_seminorm_lb(s1, m, a, 8);
    Rat ub = block_seminorm_ub(s1, m, a);
    CHECK(lb <= ub);
    CHECK(lb == 2);
    CHECK(ub == 2);
}

TEST_CASE("bracket of a block combination obeys the two-sided estimate") {
    auto s0 = parse_spec("schreier(S(0))");
    auto s1 = parse_spec("schreier(S(1))");
    SetGen m{{}, 2, 2};
    std::vector<Vec> blocks{V("[1:1]"), V("[3:1]")};
    auto rep = trip_inequality_check(FddBlocking{s0}, s1, m, V("[1:1,2:1]"),
                                     blocks);
    CHECK(rep.factor2);
    CHECK(rep.factor1);
}
