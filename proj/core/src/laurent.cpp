#include "zkinv/laurent.hpp"

#include <cctype>
#include <sstream>

#include "zkinv/errors.hpp"

namespace zkinv {

LaurentPoly::LaurentPoly(const mpq_class& c, int s, int r) {
    if (c != 0) terms_[{r, s}] = c;
}

mpq_class LaurentPoly::coeff(int s, int r) const {
    auto it = terms_.find({r, s});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::set_coeff(int s, int r, const mpq_class& c) {
    if (c == 0)
        terms_.erase({r, s});
    else
        terms_[{r, s}] = c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            BiExp e{e1.r + e2.r, e1.s + e2.s};
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                mpq_class c = c1 * c2;
                if (c != 0) out.terms_[e] = c;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

LaurentPoly LaurentPoly::shifted(int s, int r) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[{e.r + r, e.s + s}] = c;
    return out;
}

LaurentPoly LaurentPoly::truncated_u(int n) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (e.r <= n) out.terms_[e] = c;
    return out;
}

std::optional<DegreeExtrema> LaurentPoly::extrema() const {
    if (terms_.empty()) return std::nullopt;
    DegreeExtrema d{terms_.begin()->first.r, terms_.begin()->first.r,
                    terms_.begin()->first.s, terms_.begin()->first.s};
    for (const auto& [e, c] : terms_) {
        d.min_u = std::min(d.min_u, e.r);
        d.max_u = std::max(d.max_u, e.r);
        d.min_z = std::min(d.min_z, e.s);
        d.max_z = std::max(d.max_z, e.s);
    }
    return d;
}

bool monomial_is_V_holomorphic(int k, int s, int r) { return s <= k * r; }

bool LaurentPoly::is_V_holomorphic(int k) const {
    for (const auto& [e, c] : terms_)
        if (e.s > k * e.r) return false;
    return true;
}

bool LaurentPoly::is_U_holomorphic() const {
    for (const auto& [e, c] : terms_)
        if (e.s < 0) return false;
    return true;
}

namespace {

void append_monomial(std::ostream& os, const mpq_class& c, const BiExp& e, bool first) {
    mpq_class a = abs(c);
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = e.s != 0 || e.r != 0;
    if (a != 1 || !has_vars) {
        os << a.get_str();
        if (has_vars) os << "*";
    }
    if (e.s != 0) {
        os << "z";
        if (e.s != 1) os << "^" << e.s;
        if (e.r != 0) os << "*";
    }
    if (e.r != 0) {
        os << "u";
        if (e.r != 1) os << "^" << e.r;
    }
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(os, c, e, first);
        first = false;
    }
    return os.str();
}

namespace {

// Recursive-descent parser for the polynomial grammar.  Positions are byte offsets
// into the original string, skipping nothing, so error messages point at the source.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    LaurentPoly run() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        LaurentPoly result = parse_expr();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        return result;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    LaurentPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (!at_end() && peek() == '-') {
            negate = true;
            ++pos_;
        }
        LaurentPoly acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) break;
            char op = peek();
            ++pos_;
            LaurentPoly t = parse_term();
            if (op == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            acc = acc * parse_factor();
        }
        return acc;
    }

    LaurentPoly parse_factor() {
        skip_ws();
        if (at_end()) throw ParseError("expected factor", pos_);
        char c = peek();
        if (c == 'z' || c == 'u') {
            ++pos_;
            int e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                e = parse_sint();
            }
            if (c == 'u' && e < 0)
                throw ParseError("u-exponent must be >= 0", pos_);
            return c == 'z' ? LaurentPoly(1, e, 0) : LaurentPoly(1, 0, e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_uint();
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t denom_pos = pos_;
                mpz_class den = parse_uint();
                if (den == 0) throw ParseError("zero denominator", denom_pos);
                mpq_class q(num, den);
                q.canonicalize();
                return LaurentPoly::constant(q);
            }
            return LaurentPoly::constant(mpq_class(num));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    mpz_class parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", pos_);
        return mpz_class(text_.substr(start, pos_ - start));
    }

    int parse_sint() {
        skip_ws();
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        mpz_class v = parse_uint();
        if (!v.fits_sint_p()) throw ParseError("exponent out of range", start);
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace zkinv
