#include "zkinv/poly.hpp"

#include <algorithm>

namespace zkinv {

namespace {

// Shared descending-order merge for term vectors.
template <typename T, typename Cmp>
std::vector<T> merge_terms(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = cmp(a[i], b[j]);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
        } else {
            mpq_class s = a[i].c + b[j].c;
            if (s != 0) {
                T t = a[i];
                t.c = s;
                out.push_back(std::move(t));
            }
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

std::string coeff_prefix(const mpq_class& c, bool lead_unit_omitted) {
    mpq_class a = abs(c);
    std::string out = c < 0 ? "-" : "";
    if (a != 1 || !lead_unit_omitted) out += a.get_str() + "*";
    return out;
}

}  // namespace

Poly Poly::term(const Monomial& m, const mpq_class& c) {
    Poly p;
    if (c != 0) p.t.push_back({m, c});
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.t = merge_terms(t, o.t, [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m); });
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return zero();
    Poly out = *this;
    for (auto& term : out.t) term.c *= c;
    return out;
}

Poly Poly::mono_mul(const Monomial& m, const mpq_class& c) const {
    if (c == 0) return zero();
    Poly out;
    out.t.reserve(t.size());
    for (const auto& term : t) out.t.push_back({term.m * m, term.c * c});
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& term : t) out = out + o.mono_mul(term.m, term.c);
    return out;
}

bool Poly::operator==(const Poly& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
    return true;
}

std::string Poly::str() const {
    if (t.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& term = t[i];
        std::string mono = term.m.str();
        std::string coeff = coeff_prefix(term.c, mono != "1");
        if (mono == "1" && (coeff.empty() || coeff == "-")) coeff += "1";
        if (i == 0) {
            out += coeff;
        } else {
            out += term.c < 0 ? " - " : " + ";
            out += coeff.empty() || coeff[0] != '-' ? coeff : coeff.substr(1);
        }
        if (mono != "1") out += mono;
    }
    return out;
}

ModVec ModVec::term(int pos, const Monomial& m, const mpq_class& c) {
    ModVec v;
    if (c != 0) v.t.push_back({pos, m, c});
    return v;
}

ModVec ModVec::operator+(const ModVec& o) const {
    ModVec out;
    out.t = merge_terms(t, o.t, [](const MTerm& a, const MTerm& b) { return mterm_cmp(a, b); });
    return out;
}

ModVec ModVec::operator-(const ModVec& o) const { return *this + o.scaled(-1); }

ModVec ModVec::scaled(const mpq_class& c) const {
    if (c == 0) return zero();
    ModVec out = *this;
    for (auto& term : out.t) term.c *= c;
    return out;
}

ModVec ModVec::mono_mul(const Monomial& m, const mpq_class& c) const {
    if (c == 0) return zero();
    ModVec out;
    out.t.reserve(t.size());
    for (const auto& term : t) out.t.push_back({term.pos, term.m * m, term.c * c});
    return out;
}

Poly ModVec::component(int pos) const {
    Poly out;
    for (const auto& term : t)
        if (term.pos == pos) out.t.push_back({term.m, term.c});
    std::sort(out.t.begin(), out.t.end(),
              [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
    return out;
}

bool ModVec::operator==(const ModVec& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].pos != o.t[i].pos || !(t[i].m == o.t[i].m) || t[i].c != o.t[i].c) return false;
    return true;
}

std::string ModVec::str() const {
    int ambient = 0;
    for (const auto& term : t) ambient = std::max(ambient, term.pos + 1);
    return str(ambient);
}

std::string ModVec::str(int ambient) const {
    std::string out = "(";
    for (int p = 0; p < ambient; ++p) {
        if (p) out += ", ";
        out += component(p).str();
    }
    return out + ")";
}

ModVec poly_mul(const Poly& f, const ModVec& v) {
    ModVec out;
    for (const auto& term : f.t) out = out + v.mono_mul(term.m, term.c);
    return out;
}

namespace {

template <typename Vec>
void make_primitive_impl(Vec& terms) {
    if (terms.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& term : terms) {
        mpz_class d = term.c.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    std::vector<mpz_class> nums;
    nums.reserve(terms.size());
    for (const auto& term : terms) {
        mpq_class scaled = term.c * den_lcm;
        nums.push_back(scaled.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nums.back().get_mpz_t());
    }
    bool flip = nums.front() < 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        mpz_class n = nums[i] / num_gcd;
        terms[i].c = mpq_class(flip ? -n : n);
    }
}

}  // namespace

void make_primitive(ModVec& v) { make_primitive_impl(v.t); }
void make_primitive(Poly& f) { make_primitive_impl(f.t); }

}  // namespace zkinv
