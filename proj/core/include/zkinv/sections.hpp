#pragma once

#include <map>
#include <memory>
#include <vector>

#include "zkinv/bundle.hpp"
#include "zkinv/module.hpp"

namespace zkinv {

// Indeterminate coefficient of a truncated generic section: family A is the
// first slot, family B the second.
enum class CoeffFamily : std::uint8_t { A, B };

struct CoefficientId {
    CoeffFamily family = CoeffFamily::A;
    int r = 0;
    int s = 0;
    friend auto operator<=>(const CoefficientId&, const CoefficientId&) = default;
};

std::string coeff_name(const CoefficientId& id);  // "a(r,s)" / "b(r,s)"

using LinearForm = std::map<CoefficientId, mpq_class>;
using SymbolicPoly = std::map<BiExp, LinearForm>;  // bidegree -> linear form

// Generic pair of slot polynomials wide enough to carry every section of the
// bundle on the first chart.
struct GenericSections {
    BundleSpec spec;
    int a_max = 0;  // u-degree cap of the first slot
    int b_max = 0;  // u-degree cap of the second slot
    SymbolicPoly a, b;
    std::vector<CoefficientId> variables;  // B family first, then A, (r,s) ascending
};

GenericSections build_generic_sections(const BundleSpec& spec);

// Linear constraint forcing holomorphy of the transported pair on the second
// chart, scaled monic on its pivot.
struct SectionRelation {
    BiExp source;  // offending monomial of z^j*a + p*b
    LinearForm f;
    CoefficientId pivot;
};

// One relation per monomial of z^j*a + p*b lying outside the second chart,
// iterated in ascending (r, s) order.  Each A coefficient feeds exactly one
// monomial, so A pivots never cascade.
std::vector<SectionRelation> get_relations(const GenericSections& gs);

struct SolvedSections {
    GenericSections sections;                // entries rewritten over the free coefficients
    std::vector<CoefficientId> free_coeffs;  // B family first, then A
};

SolvedSections solve_relations(GenericSections gs, const std::vector<SectionRelation>& rels);

// Lift of the function z^s*u^r to the cone ring: greedy factorization into
// the w variables, largest index first.  Requires 0 <= s <= k*r.
Monomial pi_star(const ConeRing& ring, int s, int r);

// Sections assembled into an S-submodule of S^2: one generator column per
// free coefficient, cleared by a global u-power so every monomial lifts.
struct SectionModule {
    std::shared_ptr<ConeRing> ring;
    int uexp = 0;
    std::vector<CoefficientId> sources;  // free coefficient behind each column
    SubmoduleData module;
};

SectionModule make_module(const SolvedSections& solved);

// dim_Q coker(M -> M^vee^vee) for the section module.
int width(const BundleSpec& spec, const ComputeOptions& opts = {});

}  // namespace zkinv
