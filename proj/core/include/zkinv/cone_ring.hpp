#pragma once

#include <vector>

#include "zkinv/poly.hpp"

namespace zkinv {

// Coordinate ring of the cone obtained by collapsing the zero section of the
// total space with chart parameter k:
//
//   S = Q[w_0..w_k] / (w_i*w_l - w_{i+1}*w_{l-1} : 0 <= i <= k-2, i+2 <= l <= k)
//
// where w_i corresponds to the function z^i*u.  k = 1 has no relations,
// k = 2 one, k = 3 three, k = 4 six.
class ConeRing {
public:
    explicit ConeRing(int k);

    int k;
    int nvars;                  // k + 1
    std::vector<Poly> ideal;    // defining quadrics, fixed enumeration order
    std::vector<Poly> ideal_gb; // reduced basis used for normal forms

    // Normal form modulo the defining ideal.
    Poly reduce(const Poly& f) const;
    // Entrywise normal form of a module element.
    ModVec reduce_entries(const ModVec& v) const;
};

}  // namespace zkinv
