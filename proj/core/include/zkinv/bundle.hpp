#pragma once

// Defining data of a rank-2 bundle with c_1 = 0 on Z_k.
//
// On the charts U = (z, u), V = (w, v) = (z^-1, z^k u) the bundle E is glued by
//
//     T = | z^j  p(z,u) |
//         | 0    z^-j   |
//
// with j >= 0 the splitting type and p an extension polynomial divisible by u.
// Two extension polynomials give isomorphic bundles when they agree within the
// canonical window 1 <= r <= (2j-2)/k, k*r - j + 1 <= s <= j - 1; normalize()
// drops everything outside it.

#include <utility>

#include "zkinv/laurent.hpp"

namespace zkinv {

struct ComputeOptions {
    bool normalize = true;
};

struct BundleSpec {
    int k = 1;
    int j = 0;
    LaurentPoly p;

    bool operator==(const BundleSpec&) const = default;
};

// Checks k >= 1, j >= 0, u | p, and p = 0 when j = 0.  Throws InvalidKError,
// InvalidJError, IllPosedError, or NonzeroPForJZeroError.
void validate(const BundleSpec& spec);

// True iff z^s u^r lies in the canonical window for (k, j).
bool in_canonical_window(int k, int j, int s, int r);

// Restriction of p to the canonical window.  Idempotent; never changes any invariant.
LaurentPoly normalize_p(const BundleSpec& spec);

// validate + normalize in one step; every invariant pipeline starts here.
BundleSpec normalized(BundleSpec spec);

// Image of a U-chart section (a, b) under T: (z^j a + p b, z^-j b).
std::pair<LaurentPoly, LaurentPoly> apply_transition(const BundleSpec& spec,
                                                     const LaurentPoly& a,
                                                     const LaurentPoly& b);

inline int ceil_div(int a, int b) {
    // b > 0; rounds toward +infinity
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline int floor_div(int a, int b) {
    // b > 0; rounds toward -infinity
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace zkinv
