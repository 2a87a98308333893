#pragma once

#include <vector>

#include "zkinv/groebner.hpp"

namespace zkinv {

// Module presented as a cokernel: S^rank / <relation columns>.
struct ModulePresentation {
    const ConeRing* ring = nullptr;
    int rank = 0;
    std::vector<ModVec> rels;  // columns in S^rank
};

// Submodule of a free module S^ambient, given by generator columns.
struct SubmoduleData {
    const ConeRing* ring = nullptr;
    int ambient = 0;
    std::vector<ModVec> gens;
};

// S^|gens| / <syzygies of the generators>, the presentation induced by the
// embedding.
ModulePresentation presentation_of(const SubmoduleData& M);

// Drops columns lying in the span of the preceding ones; `kept`, if given,
// receives the surviving indices in order.
std::vector<ModVec> prune_generators(const ConeRing& ring, const std::vector<ModVec>& cols,
                                     int ambient, std::vector<int>* kept = nullptr);

// Generators of Hom_S(M, S) as columns in S^rank: a column h sends the class
// of the i-th module generator to h_i.  The full unit set when M is free,
// empty when M is torsion.
std::vector<ModVec> hom_dual_gens(const ModulePresentation& M);

// Q-dimension of the cokernel of the natural evaluation M -> M^vee^vee.
// Zero for free and for torsion modules; finite whenever the cokernel is
// supported at the cone point, otherwise InfiniteLengthError.
long eval_and_coker_length(const SubmoduleData& M);

// Number of standard monomials of P^ambient outside the lead terms of the
// basis; throws InfiniteLengthError when some component direction is
// unbounded.
long coker_dimension(const SModuleGB& gb);

}  // namespace zkinv
