#include "zkinv/module.hpp"

#include "zkinv/errors.hpp"

namespace zkinv {

ModulePresentation presentation_of(const SubmoduleData& M) {
    return {M.ring, static_cast<int>(M.gens.size()), syzygies_S(*M.ring, M.gens, M.ambient)};
}

std::vector<ModVec> prune_generators(const ConeRing& ring, const std::vector<ModVec>& cols,
                                     int ambient, std::vector<int>* kept) {
    std::vector<ModVec> out;
    SModuleGB gb(ring, {}, ambient, false);
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
        if (cols[i].is_zero() || gb.contains(cols[i])) continue;
        gb.add(cols[i]);
        out.push_back(cols[i]);
        if (kept) kept->push_back(i);
    }
    return out;
}

std::vector<ModVec> hom_dual_gens(const ModulePresentation& M) {
    if (M.rank == 0) return {};
    if (M.rels.empty()) {
        std::vector<ModVec> units;
        for (int i = 0; i < M.rank; ++i) units.push_back(ModVec::unit(M.ring->nvars, i));
        return units;
    }
    // Functionals annihilating every relation: syzygies of the rows of the
    // relation matrix.
    int q = static_cast<int>(M.rels.size());
    std::vector<ModVec> rows(M.rank);
    for (int c = 0; c < q; ++c)
        for (const auto& term : M.rels[c].t)
            rows[term.pos] = rows[term.pos] + ModVec::term(c, term.m, term.c);
    return prune_generators(*M.ring, syzygies_S(*M.ring, rows, q), M.rank);
}

long eval_and_coker_length(const SubmoduleData& M) {
    if (M.gens.empty()) return 0;
    const ConeRing& ring = *M.ring;
    int p = static_cast<int>(M.gens.size());

    std::vector<ModVec> dual = hom_dual_gens(presentation_of(M));
    int t = static_cast<int>(dual.size());
    if (t == 0) return 0;  // M^vee = 0, so the bidual vanishes

    std::vector<ModVec> bidual =
        hom_dual_gens({&ring, t, syzygies_S(ring, dual, p)});
    int u = static_cast<int>(bidual.size());
    if (u == 0) return 0;

    // Evaluation sends the i-th generator of M to the functional-of-functionals
    // h |-> h_i: its coordinates over the dual generators are their i-th
    // entries.  Express each image over the bidual generators.
    SModuleGB membership(ring, bidual, t);
    std::vector<ModVec> cols;
    for (int i = 0; i < p; ++i) {
        ModVec v;
        for (int l = 0; l < t; ++l) {
            Poly entry = dual[l].component(i);
            for (const auto& term : entry.t) v = v + ModVec::term(l, term.m, term.c);
        }
        std::map<int, Poly> witness;
        if (!membership.contains(v, &witness))
            throw Error("internal: evaluation image escapes the bidual generators");
        ModVec col;
        for (const auto& [l, f] : witness)
            for (const auto& term : f.t) col = col + ModVec::term(l, term.m, term.c);
        cols.push_back(std::move(col));
    }

    // Cokernel of ev: bidual coordinates modulo the image columns and the
    // syzygies of the bidual generators.
    for (auto& s : syzygies_S(ring, bidual, t)) cols.push_back(std::move(s));
    SModuleGB coker(ring, cols, u, false);
    return coker_dimension(coker);
}

long coker_dimension(const SModuleGB& gb) {
    int ambient = gb.ambient();
    int nvars = gb.ring().nvars;
    std::vector<std::vector<Monomial>> leads(ambient);
    for (const auto& el : gb.basis()) leads[el.g.lead().pos].push_back(el.g.lead().m);

    long total = 0;
    for (int pos = 0; pos < ambient; ++pos) {
        bool unit = false;
        for (const auto& m : leads[pos])
            if (m.is_one()) {
                unit = true;
                break;
            }
        if (unit) continue;

        // A pure power of every variable must appear among the leads, else the
        // quotient has infinite dimension in this component.
        std::vector<int> bound(nvars, -1);
        for (const auto& m : leads[pos]) {
            int support = -1;
            bool pure = true;
            for (int i = 0; i < nvars; ++i)
                if (m.e[i] > 0) {
                    if (support >= 0) {
                        pure = false;
                        break;
                    }
                    support = i;
                }
            if (pure && support >= 0 && (bound[support] < 0 || m.e[support] < bound[support]))
                bound[support] = m.e[support];
        }
        for (int i = 0; i < nvars; ++i)
            if (bound[i] < 0)
                throw InfiniteLengthError("cokernel has infinite dimension in component " +
                                          std::to_string(pos));

        Monomial probe = Monomial::one(nvars);
        long count = 0;
        auto walk = [&](auto&& self, int var) -> void {
            if (var == nvars) {
                for (const auto& m : leads[pos])
                    if (m.divides(probe)) return;
                ++count;
                return;
            }
            for (int e = 0; e < bound[var]; ++e) {
                probe.e[var] = static_cast<int16_t>(e);
                self(self, var + 1);
            }
            probe.e[var] = 0;
        };
        walk(walk, 0);
        total += count;
    }
    return total;
}

}  // namespace zkinv
