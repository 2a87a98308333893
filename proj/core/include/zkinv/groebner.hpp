#pragma once

#include <map>
#include <set>
#include <vector>

#include "zkinv/cone_ring.hpp"
#include "zkinv/poly.hpp"

namespace zkinv {

struct GBElement {
    ModVec g;                  // monic lead coefficient
    std::map<int, Poly> lift;  // expression of g in the engine inputs
};

// Buchberger completion for submodules of P^ambient, P = Q[w_0..w_{nvars-1}],
// under the term-over-position order.  S-pairs are formed only between
// elements with equal lead position; no pair-skipping criteria are applied
// (the coprimality criterion is not valid for module leads).  Optionally
// tracks lifts (basis = A * inputs) and Schreyer-style syzygies of the inputs.
class BuchbergerEngine {
public:
    BuchbergerEngine(int nvars, int ambient, bool track_lifts, bool collect_syzygies);

    int add_input(const ModVec& v);  // returns the input index
    void complete();                 // process all pending S-pairs

    // Full normal form; terms whose lead admits no divisor migrate to the
    // remainder.  witness, if given, receives quotients over basis indices:
    // v = sum_l witness[l] * basis[l].g + remainder.
    ModVec reduce(ModVec v, std::map<int, Poly>* witness = nullptr) const;
    bool contains(const ModVec& v) const { return reduce(v).is_zero(); }

    const std::vector<GBElement>& basis() const { return basis_; }
    int input_count() const { return n_inputs_; }
    int ambient() const { return ambient_; }
    int nvars() const { return nvars_; }

    // Generators of the syzygy module of the inputs, in input coordinates:
    // one column per processed S-pair plus one per redundant input.  Requires
    // lift tracking and syzygy collection; call after complete().
    std::vector<ModVec> input_syzygies() const;

private:
    struct SPair {
        Monomial lcm;
        int i, j;
    };
    struct SPairLess {
        bool operator()(const SPair& a, const SPair& b) const {
            int c = mono_cmp(a.lcm, b.lcm);
            if (c != 0) return c < 0;  // smaller lcm first
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    int install(ModVec g, std::map<int, Poly> lift);

    int nvars_;
    int ambient_;
    bool lifts_;
    bool syz_;
    int n_inputs_ = 0;
    std::vector<ModVec> inputs_;
    std::vector<GBElement> basis_;
    std::set<SPair, SPairLess> pending_;
    std::vector<std::map<int, Poly>> syz_g_;  // syzygies of the basis, basis coordinates
};

// Groebner basis of an S-submodule of S^ambient over the cone ring: the
// defining quadrics are appended in every component, and membership witnesses
// refer to the caller's generators only.
class SModuleGB {
public:
    SModuleGB(const ConeRing& ring, const std::vector<ModVec>& inputs, int ambient,
              bool track_witness = true);

    void add(const ModVec& v);  // extend by one more caller generator

    // True iff v lies in the submodule; witness, if given, expresses v over
    // the caller generators modulo the cone ideal.
    bool contains(const ModVec& v, std::map<int, Poly>* witness = nullptr) const;

    const std::vector<GBElement>& basis() const { return engine_.basis(); }
    int ambient() const { return ambient_; }
    const ConeRing& ring() const { return *ring_; }

private:
    const ConeRing* ring_;
    int ambient_;
    BuchbergerEngine engine_;
    std::vector<int> caller_of_input_;  // engine input index -> caller index, -1 for cone columns
    int n_caller_ = 0;
};

// Generators of the syzygy module over S of the given columns: syzygies of
// the columns extended by the cone quadrics in every component, projected to
// the caller coordinates, entries in normal form, zero columns dropped.
std::vector<ModVec> syzygies_S(const ConeRing& ring, const std::vector<ModVec>& inputs,
                               int ambient);

}  // namespace zkinv
