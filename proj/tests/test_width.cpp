#include <algorithm>

#include "doctest.h"
#include "zkinv/sections.hpp"

using namespace zkinv;

namespace {
BundleSpec spec(int k, int j, const char* p) { return {k, j, parse_poly(p)}; }

Monomial mono(int nvars, std::initializer_list<std::pair<int, int>> powers) {
    Monomial m = Monomial::one(nvars);
    for (auto [i, e] : powers) m = m * Monomial::var(nvars, i, e);
    return m;
}
}  // namespace

TEST_CASE("pi_star lifts") {
    ConeRing r2(2);
    CHECK(pi_star(r2, 0, 2) == mono(3, {{0, 2}}));
    CHECK(pi_star(r2, 1, 2) == mono(3, {{0, 1}, {1, 1}}));
    CHECK(pi_star(r2, 2, 2) == mono(3, {{0, 1}, {2, 1}}));
    CHECK(pi_star(r2, 3, 2) == mono(3, {{1, 1}, {2, 1}}));
    CHECK(pi_star(r2, 4, 2) == mono(3, {{2, 2}}));

    ConeRing r3(3);
    // greedy absorbs the largest variable first
    CHECK(pi_star(r3, 3, 2) == mono(4, {{0, 1}, {3, 1}}));

    // the lift has u-degree r for every admissible (s, r)
    for (int k = 1; k <= 4; ++k) {
        ConeRing ring(k);
        for (int r = 0; r <= 4; ++r)
            for (int s = 0; s <= k * r; ++s) CHECK(pi_star(ring, s, r).deg == r);
    }
}

TEST_CASE("generic sections for (2,3,u)") {
    GenericSections gs = build_generic_sections(spec(2, 3, "u"));
    CHECK(gs.a_max == 3);
    CHECK(gs.b_max == 2);
    CHECK(gs.variables.size() == 36);
    CHECK(gs.variables.front().family == CoeffFamily::B);

    auto rels = get_relations(gs);
    CHECK(rels.size() == 12);
    // every relation here pivots on an A coefficient
    for (const auto& rel : rels) CHECK(rel.pivot.family == CoeffFamily::A);
    // the coupling relation a(1,0) + b(0,3) at source z^3*u
    LinearForm coupling = {{{CoeffFamily::A, 1, 0}, 1}, {{CoeffFamily::B, 0, 3}, 1}};
    bool found = false;
    for (const auto& rel : rels)
        if (rel.source == BiExp{1, 3} && rel.f == coupling) found = true;
    CHECK(found);

    SolvedSections sol = solve_relations(gs, rels);
    CHECK(sol.free_coeffs.size() == 24);

    SectionModule sm = make_module(sol);
    CHECK(sm.uexp == 2);
    CHECK(sm.module.ambient == 2);
    CHECK(sm.module.gens.size() == 24);

    std::vector<int> kept;
    auto pruned = prune_generators(*sm.ring, sm.module.gens, 2, &kept);
    REQUIRE(pruned.size() == 4);
    CHECK(kept == std::vector<int>{0, 1, 2, 3});
    const int n = 3;
    CHECK(pruned[0] == ModVec::term(1, mono(n, {{0, 2}}), 1));
    CHECK(pruned[1] == ModVec::term(1, mono(n, {{0, 1}, {1, 1}}), 1));
    CHECK(pruned[2] == ModVec::term(1, mono(n, {{0, 1}, {2, 1}}), 1));
    CHECK(pruned[3] == ModVec::term(0, mono(n, {{0, 3}}), -1) +
                           ModVec::term(1, mono(n, {{1, 1}, {2, 1}}), 1));
}

TEST_CASE("width values") {
    CHECK(width(spec(2, 3, "u")) == 1);
    CHECK(width(spec(2, 3, "z*u")) == 0);
    CHECK(width(spec(2, 3, "0")) == 2);
    CHECK(width(spec(1, 2, "u")) == 1);
    CHECK(width(spec(1, 2, "z*u^2")) == 2);
    CHECK(width(spec(1, 2, "0")) == 3);
    CHECK(width(spec(2, 6, "z*u")) == 0);
    CHECK(width(spec(3, 5, "0")) == 3);
    CHECK(width(spec(1, 0, "0")) == 0);
}
