#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace zkinv {

inline constexpr int kMaxRingVars = 8;

// Monomial in the ambient polynomial ring Q[w_0 .. w_{nvars-1}].
// Exponents are stored inline; total degree is cached.
struct Monomial {
    std::array<int16_t, kMaxRingVars> e{};
    int16_t nvars = 0;
    int16_t deg = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.nvars = static_cast<int16_t>(nvars);
        return m;
    }

    static Monomial var(int nvars, int i, int exp = 1) {
        Monomial m = one(nvars);
        m.e[i] = static_cast<int16_t>(exp);
        m.deg = static_cast<int16_t>(exp);
        return m;
    }

    bool is_one() const { return deg == 0; }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    bool coprime(const Monomial& m) const {
        for (int i = 0; i < nvars; ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial out = *this;
        for (int i = 0; i < nvars; ++i) out.e[i] = static_cast<int16_t>(out.e[i] + m.e[i]);
        out.deg = static_cast<int16_t>(deg + m.deg);
        return out;
    }

    // this / m; caller guarantees m.divides(*this)
    Monomial quotient(const Monomial& m) const {
        Monomial out = *this;
        for (int i = 0; i < nvars; ++i) out.e[i] = static_cast<int16_t>(out.e[i] - m.e[i]);
        out.deg = static_cast<int16_t>(deg - m.deg);
        return out;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out = a;
        out.deg = 0;
        for (int i = 0; i < a.nvars; ++i) {
            out.e[i] = std::max(a.e[i], b.e[i]);
            out.deg = static_cast<int16_t>(out.deg + out.e[i]);
        }
        return out;
    }

    bool operator==(const Monomial& m) const {
        if (nvars != m.nvars || deg != m.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] != m.e[i]) return false;
        return true;
    }

    std::string str() const;  // "w0^2*w1", "1" for the unit
};

// Graded reverse lexicographic order with w_0 < w_1 < ... < w_{nvars-1}.
// Higher total degree wins; on equal degree the monomial with the smaller
// exponent on the earliest differing (smallest) variable is the larger one.
// Returns <0, 0, >0 as a < b, a == b, a > b.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

}  // namespace zkinv
