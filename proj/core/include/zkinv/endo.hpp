#pragma once

#include "zkinv/bundle.hpp"
#include "zkinv/cech.hpp"
#include "zkinv/cohomology.hpp"

namespace zkinv {

// Transition of the endomorphism bundle in the slot order (diagonal-free,
// upper, lower, diagonal-trace): unit determinant, inverse is exact.
LaurentMatrix end_transition(const BundleSpec& spec);
LaurentMatrix end_transition_inverse(const BundleSpec& spec);

// h^1 of the endomorphism bundle: the twist-2j window coupled through
// z^-j * p against corrections in rows 0 <= s <= k*r.
int h1_end(const BundleSpec& spec, const HeightOptions& opts = {});

// Correction monomials feeding the endomorphism window.
std::vector<BiExp> end_corrections(const BundleSpec& spec);

// Truncated-cocycle oracle for h1_end.
int cech_h1_end_oracle(const BundleSpec& spec);

// h^0 of the endomorphism bundle on the n-th formal neighborhood (u-degree
// truncated at n).  Requires j >= 1 and p supported in the canonical window;
// the section ansatz is wide enough only there.
long h0_end(const BundleSpec& spec, int n);

// Closed form of h0_end for the split bundle (p = 0).
long h0_end_split(int k, int j, int n);

// Stabilized difference h0_end(split) - h0_end(spec) over growing
// neighborhoods; zero when p = 0.  With normalize = false the caller must
// pass p already inside the canonical window (see h0_end).
int delta(const BundleSpec& spec, const ComputeOptions& opts = {});

}  // namespace zkinv
