#pragma once

#include <map>
#include <vector>

#include "zkinv/bundle.hpp"

namespace zkinv {

// Where the second-chart holomorphy test of leftover terms is applied: on the
// twisted monomials (after multiplying the window twist back in) or on the
// untwisted ones.  Twisted is the default; the truncated-cocycle oracle
// distinguishes the two and confirms it.
enum class TwistStage { Twisted, Untwisted };

struct HeightOptions {
    TwistStage stage = TwistStage::Twisted;
    bool normalize = true;
};

// Negative-power monomials carrying obstructed cocycle classes for twist m:
// 0 <= r <= floor((m-2)/k), k*r - m + 1 <= s <= -1, ascending (r, s).
std::vector<BiExp> canonical_cocycles(int k, int m);

// Linear combination of correction monomials (the indeterminate coefficients
// of the second-slot perturbation).
using BLinearForm = std::map<BiExp, mpq_class>;

// One kept candidate's constraint: candidate part plus surviving leftover
// terms, every entry carrying its correction-linear coefficient.
struct WindowRelation {
    BiExp candidate;
    std::map<BiExp, BLinearForm> entries;
};

struct WindowBasis {
    std::vector<BiExp> kept;
    std::vector<WindowRelation> relations;
};

// Shared candidate/relation machinery for a window of twist m coupled through
// the multiplier q against the given correction monomials.
struct WindowProblem {
    int k = 1;
    int m = 0;
    LaurentPoly q;
    std::vector<BiExp> corrections;
};

WindowBasis window_relations(const WindowProblem& problem, TwistStage stage);

// Specializes each relation at each correction coefficient, dedupes, cascades
// single-monomial relations, and returns |generators| - rank(relations).
int fix_height_relations(const WindowBasis& basis);

// Correction monomials for the rank-2 window: rows 0 <= r <= rmax - min_u(p),
// columns -j <= s <= k*r.
std::vector<BiExp> height_corrections(const BundleSpec& spec);

int height(const BundleSpec& spec, const HeightOptions& opts = {});

}  // namespace zkinv
