#include "zkinv/cone_ring.hpp"

#include <algorithm>

#include "zkinv/errors.hpp"
#include "zkinv/groebner.hpp"

namespace zkinv {

ConeRing::ConeRing(int k) : k(k), nvars(k + 1) {
    if (k < 1) throw InvalidKError("chart parameter k must be >= 1");
    if (nvars > kMaxRingVars)
        throw InvalidKError("chart parameter k exceeds the ring kernel limit of " +
                            std::to_string(kMaxRingVars - 1));
    for (int i = 0; i + 2 <= k; ++i)
        for (int l = i + 2; l <= k; ++l) {
            Poly q = Poly::term(Monomial::var(nvars, i) * Monomial::var(nvars, l), 1) -
                     Poly::term(Monomial::var(nvars, i + 1) * Monomial::var(nvars, l - 1), 1);
            ideal.push_back(std::move(q));
        }

    BuchbergerEngine engine(nvars, 1, false, false);
    for (const auto& q : ideal) {
        ModVec v;
        for (const auto& term : q.t) v = v + ModVec::term(0, term.m, term.c);
        engine.add_input(v);
    }
    engine.complete();
    for (const auto& el : engine.basis()) ideal_gb.push_back(el.g.component(0));
}

Poly ConeRing::reduce(const Poly& f) const {
    Poly rem;
    Poly v = f;
    while (!v.is_zero()) {
        const Term lt = v.lead();
        const Poly* div = nullptr;
        for (const auto& g : ideal_gb)
            if (g.lead().m.divides(lt.m)) {
                div = &g;
                break;
            }
        if (div) {
            v = v - div->mono_mul(lt.m.quotient(div->lead().m), lt.c);
        } else {
            rem.t.push_back(lt);
            v.t.erase(v.t.begin());
        }
    }
    return rem;
}

ModVec ConeRing::reduce_entries(const ModVec& v) const {
    std::vector<int> positions;
    for (const auto& term : v.t)
        if (std::find(positions.begin(), positions.end(), term.pos) == positions.end())
            positions.push_back(term.pos);
    ModVec out;
    for (int pos : positions) {
        Poly nf = reduce(v.component(pos));
        for (const auto& term : nf.t) out = out + ModVec::term(pos, term.m, term.c);
    }
    return out;
}

}  // namespace zkinv
