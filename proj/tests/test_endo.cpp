#include "doctest.h"
#include "zkinv/endo.hpp"
#include "zkinv/errors.hpp"

using namespace zkinv;

namespace {
BundleSpec spec(int k, int j, const char* p) { return {k, j, parse_poly(p)}; }
}  // namespace

TEST_CASE("endomorphism transition") {
    for (const auto& s : {spec(2, 3, "u"), spec(2, 7, "z^-1*u + z*u^2"), spec(1, 2, "0")}) {
        LaurentMatrix t = end_transition(s);
        LaurentMatrix tinv = end_transition_inverse(s);
        CHECK(t.n == 4);
        CHECK(t * tinv == LaurentMatrix::identity(4));
        CHECK(tinv * t == LaurentMatrix::identity(4));
        CHECK(t.det() == LaurentPoly::constant(1));
    }
}

TEST_CASE("h1 of End") {
    CHECK(h1_end(spec(1, 2, "u")) == 4);
    CHECK(h1_end(spec(2, 3, "u")) == 7);
    CHECK(h1_end(spec(3, 4, "z^3*u^2")) == 11);
    CHECK(h1_end(spec(1, 3, "z^-1*u")) == 11);
    CHECK(h1_end(spec(2, 6, "z*u")) == 23);
    CHECK(h1_end(spec(1, 3, "z^-1*u + z^2*u")) == 9);
    // split: one class per window monomial of twist 2j
    CHECK(h1_end(spec(1, 3, "0")) == 15);
    CHECK(h1_end(spec(2, 6, "0")) == 36);
    for (int k = 1; k <= 4; ++k) CHECK(h1_end(spec(k, 1, "0")) == 1);
    CHECK(h1_end(spec(2, 0, "0")) == 0);
}

TEST_CASE("twist placement is observable and the oracle picks it") {
    BundleSpec s = spec(1, 3, "z^-1*u + z*u");
    HeightOptions twisted;
    HeightOptions untwisted;
    untwisted.stage = TwistStage::Untwisted;
    CHECK(h1_end(s, twisted) == 9);
    CHECK(h1_end(s, untwisted) == 7);
    CHECK(cech_h1_end_oracle(s) == 9);
}

TEST_CASE("h1_end matches the cocycle oracle") {
    const BundleSpec cases[] = {
        spec(1, 2, "u"),       spec(2, 3, "z^2*u^2"), spec(1, 3, "z*u^3"),
        spec(2, 3, "u"),       spec(1, 1, "0"),       spec(2, 1, "0"),
    };
    for (const auto& s : cases) CHECK(h1_end(s) == cech_h1_end_oracle(s));
}

TEST_CASE("h0 of End on neighborhoods") {
    CHECK(h0_end(spec(1, 1, "0"), 0) == 5);
    CHECK(h0_end(spec(1, 1, "0"), 0) == h0_end_split(1, 1, 0));
    CHECK_THROWS_AS(h0_end(spec(1, 0, "0"), 3), InvalidJError);
    // truncation is monotone
    CHECK(h0_end(spec(2, 3, "u"), 4) <= h0_end(spec(2, 3, "u"), 5));
    // a nonzero extension only removes sections
    CHECK(h0_end(spec(2, 3, "u"), 5) <= h0_end_split(2, 3, 5));
}

TEST_CASE("delta values") {
    CHECK(delta(spec(1, 2, "u")) == 2);
    CHECK(delta(spec(2, 3, "z^2*u^2")) == 1);
    CHECK(delta(spec(3, 3, "z*u")) == 1);
    CHECK(delta(spec(1, 2, "0")) == 0);
    CHECK(delta(spec(4, 4, "0")) == 0);
    CHECK(delta(spec(1, 0, "0")) == 0);
}
