#pragma once

#include <vector>

#include "zkinv/bundle.hpp"

namespace zkinv {

// Square matrix of transition functions on the chart overlap.
struct LaurentMatrix {
    int n = 0;
    std::vector<std::vector<LaurentPoly>> a;

    static LaurentMatrix identity(int n);
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    bool operator==(const LaurentMatrix& o) const;

    LaurentPoly det() const;
    // Adjugate inverse; the determinant must be a single term invertible on
    // the overlap (u-degree zero).
    LaurentMatrix inverse() const;

    std::string str() const;
};

// Rank-2 transition [[z^j, p], [0, z^-j]] and its inverse.
LaurentMatrix bundle_transition(const BundleSpec& spec);
LaurentMatrix bundle_transition_inverse(const BundleSpec& spec);

struct CechParams {
    int box_r = 0;       // obstructed classes live at u-degree <= box_r ...
    int box_s = 1;       // ... and z-degree in [-box_s, -1]
    int margin = 2;      // initial window slack beyond the box
    int max_grow = 12;   // growth steps before giving up
};

// Dimension of the space of negative-power cocycle classes modulo
// coboundaries, computed on a truncation window grown until two consecutive
// windows agree.  t_inv carries the V-side generators into the U frame.
int cech_h1_truncated(const LaurentMatrix& t_inv, int k, const CechParams& params);

// Oracle for the height of a rank-2 bundle via its transition matrix.
int cech_height_oracle(const BundleSpec& spec);

}  // namespace zkinv
