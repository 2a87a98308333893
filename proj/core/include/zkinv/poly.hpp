#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zkinv/monomial.hpp"

namespace zkinv {

struct Term {
    Monomial m;
    mpq_class c;
};

// Sparse polynomial in Q[w_0..w_{nvars-1}], terms sorted descending by mono_cmp.
class Poly {
public:
    std::vector<Term> t;

    static Poly zero() { return Poly{}; }
    static Poly term(const Monomial& m, const mpq_class& c);
    static Poly constant(int nvars, const mpq_class& c) { return term(Monomial::one(nvars), c); }

    bool is_zero() const { return t.empty(); }
    const Term& lead() const { return t.front(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly mono_mul(const Monomial& m, const mpq_class& c) const;
    Poly scaled(const mpq_class& c) const;

    bool operator==(const Poly& o) const;
    std::string str() const;
};

// One term of a free-module element: coefficient, monomial, component index.
struct MTerm {
    int pos = 0;
    Monomial m;
    mpq_class c;
};

// Term-over-position order: monomials compare grevlex; on equal monomials the
// term in the lower component is the larger one.
inline int mterm_cmp(const MTerm& a, const MTerm& b) {
    int c = mono_cmp(a.m, b.m);
    if (c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return 0;
}

// Element of a free module P^n, terms sorted descending by mterm_cmp.
class ModVec {
public:
    std::vector<MTerm> t;

    static ModVec zero() { return ModVec{}; }
    static ModVec term(int pos, const Monomial& m, const mpq_class& c);
    static ModVec unit(int nvars, int pos) { return term(pos, Monomial::one(nvars), 1); }

    bool is_zero() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }

    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec mono_mul(const Monomial& m, const mpq_class& c) const;
    ModVec scaled(const mpq_class& c) const;

    // Entry at a component, gathered as a ring polynomial.
    Poly component(int pos) const;

    bool operator==(const ModVec& o) const;
    std::string str() const;  // "(w1, -w0)" style, needs ambient rank
    std::string str(int ambient) const;
};

ModVec poly_mul(const Poly& f, const ModVec& v);

// Scales to integer coefficients with content 1 and positive lead coefficient.
void make_primitive(ModVec& v);
void make_primitive(Poly& f);

}  // namespace zkinv
