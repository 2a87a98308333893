#include "doctest.h"
#include "zkinv/bundle.hpp"
#include "zkinv/errors.hpp"

using namespace zkinv;

namespace {
BundleSpec spec(int k, int j, const char* p) { return {k, j, parse_poly(p)}; }
}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(spec(1, 0, "0")));
    CHECK_NOTHROW(validate(spec(2, 3, "u")));
    CHECK_THROWS_AS(validate(spec(0, 3, "u")), InvalidKError);
    CHECK_THROWS_AS(validate(spec(-2, 3, "u")), InvalidKError);
    CHECK_THROWS_AS(validate(spec(2, -1, "u")), InvalidJError);
    CHECK_THROWS_AS(validate(spec(1, 0, "u")), NonzeroPForJZeroError);
    // u must divide p
    CHECK_THROWS_AS(validate(spec(2, 3, "z")), IllPosedError);
    CHECK_THROWS_AS(validate(spec(2, 3, "u + z^2")), IllPosedError);
}

TEST_CASE("canonical window") {
    // (k, j) = (2, 7): 1 <= r <= 6, 2r - 6 <= s <= 6
    CHECK(in_canonical_window(2, 7, -1, 1));
    CHECK(in_canonical_window(2, 7, 6, 6));
    CHECK(!in_canonical_window(2, 7, -5, 1));
    CHECK(!in_canonical_window(2, 7, 0, 0));
    CHECK(!in_canonical_window(2, 7, 0, 7));
    // j = 1: the window is empty
    for (int r = 0; r <= 3; ++r)
        for (int s = -3; s <= 3; ++s) CHECK(!in_canonical_window(1, 1, s, r));
}

TEST_CASE("normalize_p") {
    // (2, 3): r = 1 with 0 <= s <= 2, r = 2 with s = 2
    CHECK(normalize_p(spec(2, 3, "u + z^3*u")) == parse_poly("u"));
    CHECK(normalize_p(spec(2, 3, "z^2*u^2 + u^3")) == parse_poly("z^2*u^2"));
    CHECK(normalize_p(spec(2, 3, "z^-1*u")) .is_zero());
    // idempotent
    BundleSpec s1 = normalized(spec(2, 6, "z^-1*u + z^4*u^2 + z^9*u"));
    CHECK(normalize_p(s1) == s1.p);
}

TEST_CASE("transition action") {
    BundleSpec s = spec(2, 3, "u");
    auto [ta, tb] = apply_transition(s, LaurentPoly::constant(1), LaurentPoly::zero());
    CHECK(ta == parse_poly("z^3"));
    CHECK(tb.is_zero());
    auto [ua, ub] = apply_transition(s, LaurentPoly::zero(), LaurentPoly::constant(1));
    CHECK(ua == parse_poly("u"));
    CHECK(ub == parse_poly("z^-3"));
}

TEST_CASE("integer division helpers") {
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(6, 2) == 3);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(ceil_div(0, 5) == 0);
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-6, 3) == -2);
}
