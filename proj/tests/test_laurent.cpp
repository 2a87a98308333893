#include "doctest.h"
#include "zkinv/errors.hpp"
#include "zkinv/laurent.hpp"

using namespace zkinv;

TEST_CASE("parse/str round trip") {
    const char* forms[] = {"0",
                           "u",
                           "z*u",
                           "z^-1*u + z*u^2",
                           "3/2*z^2*u^3 - u",
                           "z^5",
                           "-2",
                           "u^2 + z^2*u^2"};
    for (const char* f : forms) {
        LaurentPoly p = parse_poly(f);
        CHECK(parse_poly(p.str()) == p);
    }
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("z*u").str() == "z*u");
    CHECK(parse_poly("u + 0*z").str() == "u");
    CHECK(parse_poly("u - u").is_zero());
    CHECK(parse_poly("2*u + 1/2*u") == LaurentPoly(mpq_class(5, 2), 0, 1));
}

TEST_CASE("terms and coefficients") {
    LaurentPoly p = parse_poly("z^-1*u + z*u^2");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(-1, 1) == 1);
    CHECK(p.coeff(1, 2) == 1);
    CHECK(p.coeff(0, 0) == 0);

    p.set_coeff(3, 1, mpq_class(7));
    CHECK(p.coeff(3, 1) == 7);
    p.set_coeff(3, 1, 0);
    CHECK(p.coeff(3, 1) == 0);
    CHECK(p.term_count() == 2);
}

TEST_CASE("arithmetic") {
    LaurentPoly a = parse_poly("z*u");
    LaurentPoly b = parse_poly("z^-1*u");
    CHECK((a + b).term_count() == 2);
    CHECK(a + b - a == b);
    CHECK(a * b == parse_poly("u^2"));
    CHECK((-a) + a == LaurentPoly::zero());
    CHECK(a.shifted(-1, 1) == parse_poly("u^2"));
    CHECK(parse_poly("u + u^2 + u^3").truncated_u(2) == parse_poly("u + u^2"));
}

TEST_CASE("extrema") {
    CHECK(!LaurentPoly::zero().extrema().has_value());
    auto e = parse_poly("z^-3*u + z^5*u^4").extrema();
    REQUIRE(e.has_value());
    CHECK(e->min_u == 1);
    CHECK(e->max_u == 4);
    CHECK(e->min_z == -3);
    CHECK(e->max_z == 5);
}

TEST_CASE("chart holomorphy") {
    // V chart: z^s u^r extends iff s <= k*r.
    CHECK(monomial_is_V_holomorphic(2, 2, 1));
    CHECK(!monomial_is_V_holomorphic(2, 3, 1));
    CHECK(parse_poly("z^2*u + u^3").is_V_holomorphic(2));
    CHECK(!parse_poly("z^3*u").is_V_holomorphic(2));
    CHECK(parse_poly("u + z*u").is_U_holomorphic());
    CHECK(!parse_poly("z^-1*u").is_U_holomorphic());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("z^"), ParseError);
    CHECK_THROWS_AS(parse_poly("q"), ParseError);
    CHECK_THROWS_AS(parse_poly("u^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("u +"), ParseError);
    try {
        parse_poly("z^2 + q");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}
