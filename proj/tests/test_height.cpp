#include "doctest.h"
#include "zkinv/cech.hpp"
#include "zkinv/cohomology.hpp"

using namespace zkinv;

namespace {
BundleSpec spec(int k, int j, const char* p) { return {k, j, parse_poly(p)}; }
}  // namespace

TEST_CASE("canonical cocycles") {
    // twist m: 0 <= r <= (m-2)/k, k*r - m + 1 <= s <= -1
    auto c = canonical_cocycles(2, 7);
    CHECK(c.size() == 3 * 6 - (0 + 2 + 4));  // r = 0,1,2 rows of 6, 4, 2
    CHECK(c.front() == BiExp{0, -6});
    CHECK(c.back() == BiExp{2, -1});
    CHECK(canonical_cocycles(1, 1).empty());
    CHECK(canonical_cocycles(3, 2).size() == 1);
}

TEST_CASE("height values") {
    CHECK(height(spec(2, 7, "z^-1*u + z*u^2")) == 6);
    CHECK(height(spec(2, 6, "z^-1*u + z^4*u")) == 5);
    CHECK(height(spec(2, 6, "z*u")) == 5);
    CHECK(height(spec(2, 6, "z^-3*u")) == 7);
    CHECK(height(spec(3, 5, "z^-1*u")) == 4);
    CHECK(height(spec(3, 5, "u + z^4*u")) == 4);
    CHECK(height(spec(2, 3, "u")) == 2);
    CHECK(height(spec(2, 3, "0")) == 2);
    // no candidates at or below the first twist
    CHECK(height(spec(1, 1, "0")) == 0);
    CHECK(height(spec(3, 1, "0")) == 0);
    CHECK(height(spec(2, 0, "0")) == 0);
}

TEST_CASE("split height counts the window") {
    for (int k = 1; k <= 4; ++k)
        for (int j = 0; j <= 6; ++j)
            CHECK(height(spec(k, j, "0")) ==
                  static_cast<int>(canonical_cocycles(k, j).size()));
}

TEST_CASE("height matches the cocycle oracle") {
    const BundleSpec cases[] = {
        spec(2, 3, "u"),      spec(2, 3, "z^2*u^2"),        spec(1, 2, "z*u^2"),
        spec(3, 4, "z^3*u^2"), spec(2, 7, "z^-1*u + z*u^2"), spec(1, 3, "z^-1*u"),
    };
    for (const auto& s : cases) CHECK(height(s) == cech_height_oracle(s));
}

TEST_CASE("transition matrices invert exactly") {
    BundleSpec s = spec(2, 7, "z^-1*u + z*u^2");
    LaurentMatrix t = bundle_transition(s);
    LaurentMatrix tinv = bundle_transition_inverse(s);
    CHECK(t * tinv == LaurentMatrix::identity(2));
    CHECK(tinv * t == LaurentMatrix::identity(2));
    CHECK(t.det() == LaurentPoly::constant(1));
    CHECK(t.inverse() == tinv);
}
