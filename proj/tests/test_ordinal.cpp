#include <doctest.h>

#include "gen.hpp"
#include "seqcomb/ordinal.hpp"

using namespace seqcomb;

static Ordinal O(const std::string& s) { return parse_ordinal(s); }

TEST_CASE("compare basics") {
    CHECK(compare(Ordinal{}, Ordinal{}) == OrdCmp::equal);
    CHECK(compare(O("w"), O("w*1+0")) == OrdCmp::equal);
    CHECK(compare(O("w^{2}"), O("w*5+7")) == OrdCmp::greater);
    CHECK(compare(O("3"), O("w")) == OrdCmp::less);
}

TEST_CASE("add") {
    CHECK(add(O("1"), O("w")) == O("w"));
    CHECK(add(O("w"), O("1")) == O("w+1"));
    CHECK(add(O("w^{2}*2+w"), O("w^{2}")) == O("w^{2}*3"));
    CHECK(add(O("w+3"), O("5")) == O("w+8"));
}

TEST_CASE("mul") {
    CHECK(mul(O("w"), O("2")) == O("w*2"));
    CHECK(mul(O("2"), O("w")) == O("w"));
    CHECK(mul(O("w^{2}+1"), O("w")) == O("w^{3}"));
    CHECK(mul(O("w+1"), O("w+1")) == O("w^{2}+w+1"));
}

TEST_CASE("omega_pow and pow_nat") {
    CHECK(omega_pow(Ordinal{}) == O("1"));
    CHECK(omega_pow(O("1")) == O("w"));
    CHECK(omega_pow(O("w")) == O("w^{w}"));
    CHECK(pow_nat(O("w"), 3) == O("w^{3}"));
    CHECK(pow_nat(O("w+1"), 2) == O("w^{2}+w+1"));
    CHECK(pow_nat(O("2"), 5) == O("32"));
    CHECK(pow_nat(O("w^{2}"), 0) == O("1"));
}

TEST_CASE("classify") {
    CHECK(classify(Ordinal{}) == OrdKind::zero);
    CHECK(classify(O("w+3")) == OrdKind::successor);
    CHECK(classify(O("w^{2}")) == OrdKind::limit);
    CHECK(classify(O("w^{w}+w")) == OrdKind::limit);
}

TEST_CASE("fund_seq") {
    CHECK(fund_seq(O("w"), 3) == O("3"));
    CHECK(fund_seq(O("w^{2}"), 2) == O("w*2"));
    CHECK(fund_seq(O("w^{w}"), 4) == O("w^{4}"));
    CHECK(fund_seq(O("w*2"), 5) == O("w+5"));
    CHECK(fund_seq(O("w^{w}*3+w^{2}"), 3) == O("w^{w}*3+w*3"));
    CHECK_THROWS(fund_seq(O("w+1"), 2));
}

TEST_CASE("sub_left") {
    CHECK(sub_left(O("w^{2}*3"), O("w^{2}*2+w")) == O("w^{2}"));
    CHECK(sub_left(O("w+5"), O("w")) == O("5"));
    CHECK(sub_left(O("w"), O("7")) == O("w"));
    CHECK(add(O("w^{2}+w*4"), sub_left(O("w^{3}+1"), O("w^{2}+w*4"))) == O("w^{3}+1"));
    CHECK_THROWS(sub_left(O("w"), O("w+1")));
}

TEST_CASE("pred strips one unit from a successor") {
    CHECK(pred(O("5")) == O("4"));
    CHECK(pred(O("w+1")) == O("w"));
    CHECK(pred(O("w^{2}*3+w*4+2")) == O("w^{2}*3+w*4+1"));
    CHECK_THROWS(pred(O("w")));
    CHECK_THROWS(pred(Ordinal{}));
}

TEST_CASE("fundamental sequence stays below the limit with infinite heads") {
    // The head must be kept intact: only the last term is unwound.
    Ordinal a = O("w^{w^{w}+4}*2");
    CHECK(fund_seq(a, 1) == O("w^{w^{w}+4}+w^{w^{w}+3}"));
    CHECK(fund_seq(a, 1) < a);
    CHECK(fund_seq(O("w^{w}"), 2) == O("w^{2}"));
    CHECK(fund_seq(O("w*3"), 4) == O("w*2+4"));
}

TEST_CASE("round trip parse/print") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 500; ++i) {
        Ordinal a = testgen::random_ordinal(rng);
        CHECK(parse_ordinal(to_string(a)) == a);
    }
}

TEST_CASE("algebraic properties on random triples") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 1000; ++i) {
        Ordinal a = testgen::random_ordinal(rng);
        Ordinal b = testgen::random_ordinal(rng);
        Ordinal c = testgen::random_ordinal(rng);
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        if (b < c) {
            CHECK(add(a, b) < add(a, c));
            if (!a.is_zero()) CHECK(mul(a, b) < mul(a, c));
        }
        CHECK(pow_nat(a, 2 + 3) == mul(pow_nat(a, 2), pow_nat(a, 3)));
        if (classify(a) == OrdKind::limit)
            for (unsigned n = 1; n < 4; ++n) {
                CHECK(fund_seq(a, n) < fund_seq(a, n + 1));
                CHECK(fund_seq(a, n + 1) < a);
            }
    }
}
