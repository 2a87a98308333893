#pragma once

// Laurent polynomials in z with polynomial u-part: finite sums of c * z^s * u^r
// where s may be negative, r >= 0, and c is an exact rational.
//
// These are the coordinate functions on the overlap U \cap V of the two charts
// of Z_k = Tot(O_{P^1}(-k)); everything downstream (transition matrices,
// cocycles, section ansatze) is built from them.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zkinv {

// Exponent pair of a monomial z^s u^r.  Ordered by (r, s) ascending; this is the
// canonical term order used for iteration and printing.
struct BiExp {
    int r = 0;  // u-exponent, always >= 0
    int s = 0;  // z-exponent, any sign

    friend auto operator<=>(const BiExp&, const BiExp&) = default;
};

struct DegreeExtrema {
    int min_u, max_u;  // u-exponent range over nonzero terms
    int min_z, max_z;  // z-exponent range over nonzero terms
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const mpq_class& c, int s, int r);  // c * z^s * u^r

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const mpq_class& c) { return {c, 0, 0}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const std::map<BiExp, mpq_class>& terms() const { return terms_; }
    mpq_class coeff(int s, int r) const;

    void set_coeff(int s, int r, const mpq_class& c);  // c = 0 erases the term

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Multiplies by z^s u^r (r may push u-exponents below zero only if some term
    // had a smaller u-exponent; callers keep r >= -min_u).
    LaurentPoly shifted(int s, int r) const;

    // Drops every term with u-exponent > n.  Sections of the n-th infinitesimal
    // neighborhood live in the quotient by u^{n+1}.
    LaurentPoly truncated_u(int n) const;

    // Degree extrema over nonzero terms; nullopt for the zero polynomial.
    std::optional<DegreeExtrema> extrema() const;

    // A term z^s u^r extends holomorphically to the V chart (w, v) = (z^-1, z^k u)
    // iff s <= k*r; it is holomorphic on U iff s >= 0.
    bool is_V_holomorphic(int k) const;
    bool is_U_holomorphic() const;

    // Canonical text form; round-trips through parse_poly.
    std::string str() const;

private:
    std::map<BiExp, mpq_class> terms_;  // nonzero coefficients only
};

bool monomial_is_V_holomorphic(int k, int s, int r);

// Parses the grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer | rational "n/m" | var ['^' sint]
//   var    := 'z' | 'u'
// Whitespace is ignored.  u-exponents must be >= 0.  Throws ParseError.
LaurentPoly parse_poly(const std::string& text);

}  // namespace zkinv
