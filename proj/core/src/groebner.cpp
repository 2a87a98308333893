#include "zkinv/groebner.hpp"

#include <algorithm>

namespace zkinv {

BuchbergerEngine::BuchbergerEngine(int nvars, int ambient, bool track_lifts,
                                   bool collect_syzygies)
    : nvars_(nvars), ambient_(ambient), lifts_(track_lifts || collect_syzygies),
      syz_(collect_syzygies) {}

int BuchbergerEngine::add_input(const ModVec& v) {
    int idx = n_inputs_++;
    inputs_.push_back(v);
    if (!v.is_zero()) {
        std::map<int, Poly> lift;
        if (lifts_) lift[idx] = Poly::constant(nvars_, 1);
        install(v, std::move(lift));
    }
    return idx;
}

int BuchbergerEngine::install(ModVec g, std::map<int, Poly> lift) {
    mpq_class lc = g.lead().c;
    if (lc != 1) {
        mpq_class inv = 1 / lc;
        g = g.scaled(inv);
        for (auto& [i, f] : lift) f = f.scaled(inv);
    }
    int idx = static_cast<int>(basis_.size());
    const MTerm& lt = g.lead();
    for (int l = 0; l < idx; ++l) {
        const MTerm& ot = basis_[l].g.lead();
        if (ot.pos != lt.pos) continue;
        pending_.insert({Monomial::lcm(ot.m, lt.m), l, idx});
    }
    basis_.push_back({std::move(g), std::move(lift)});
    return idx;
}

ModVec BuchbergerEngine::reduce(ModVec v, std::map<int, Poly>* witness) const {
    ModVec rem;
    while (!v.is_zero()) {
        const MTerm lt = v.lead();
        int div = -1;
        for (int l = 0; l < static_cast<int>(basis_.size()); ++l) {
            const MTerm& bt = basis_[l].g.lead();
            if (bt.pos == lt.pos && bt.m.divides(lt.m)) {
                div = l;
                break;
            }
        }
        if (div >= 0) {
            Monomial q = lt.m.quotient(basis_[div].g.lead().m);
            v = v - basis_[div].g.mono_mul(q, lt.c);
            if (witness) {
                auto& acc = (*witness)[div];
                acc = acc + Poly::term(q, lt.c);
            }
        } else {
            rem.t.push_back(lt);
            v.t.erase(v.t.begin());
        }
    }
    if (witness) {
        for (auto it = witness->begin(); it != witness->end();)
            it = it->second.is_zero() ? witness->erase(it) : std::next(it);
    }
    return rem;
}

void BuchbergerEngine::complete() {
    while (!pending_.empty()) {
        SPair pr = *pending_.begin();
        pending_.erase(pending_.begin());
        const GBElement& gi = basis_[pr.i];
        const GBElement& gj = basis_[pr.j];
        Monomial mi = pr.lcm.quotient(gi.g.lead().m);
        Monomial mj = pr.lcm.quotient(gj.g.lead().m);
        ModVec spoly = gi.g.mono_mul(mi, 1) - gj.g.mono_mul(mj, 1);

        std::map<int, Poly> w;
        ModVec r = reduce(std::move(spoly), lifts_ ? &w : nullptr);

        std::map<int, Poly> syz;
        if (syz_) {
            syz[pr.i] = syz[pr.i] + Poly::term(mi, 1);
            syz[pr.j] = syz[pr.j] - Poly::term(mj, 1);
            for (const auto& [l, q] : w) syz[l] = syz[l] - q;
        }

        if (!r.is_zero()) {
            std::map<int, Poly> lift;
            if (lifts_) {
                for (const auto& [i, f] : gi.lift) lift[i] = lift[i] + f.mono_mul(mi, 1);
                for (const auto& [i, f] : gj.lift) lift[i] = lift[i] - f.mono_mul(mj, 1);
                for (const auto& [l, q] : w)
                    for (const auto& [i, f] : basis_[l].lift) lift[i] = lift[i] - q * f;
                for (auto it = lift.begin(); it != lift.end();)
                    it = it->second.is_zero() ? lift.erase(it) : std::next(it);
            }
            mpq_class lc = r.lead().c;
            int t = install(std::move(r), std::move(lift));
            if (syz_) syz[t] = syz[t] - Poly::constant(nvars_, lc);
        }

        if (syz_) {
            for (auto it = syz.begin(); it != syz.end();)
                it = it->second.is_zero() ? syz.erase(it) : std::next(it);
            if (!syz.empty()) syz_g_.push_back(std::move(syz));
        }
    }
}

std::vector<ModVec> BuchbergerEngine::input_syzygies() const {
    std::vector<ModVec> out;
    auto to_modvec = [&](const std::map<int, Poly>& coords) {
        ModVec v;
        for (const auto& [i, f] : coords)
            for (const auto& term : f.t) v = v + ModVec::term(i, term.m, term.c);
        return v;
    };

    // Pair syzygies, pushed down from basis coordinates through the lifts.
    for (const auto& s : syz_g_) {
        std::map<int, Poly> coords;
        for (const auto& [l, c] : s)
            for (const auto& [i, f] : basis_[l].lift) coords[i] = coords[i] + c * f;
        ModVec v = to_modvec(coords);
        if (!v.is_zero()) out.push_back(std::move(v));
    }

    // One column per input recording its re-expression over the basis.
    for (int i = 0; i < n_inputs_; ++i) {
        std::map<int, Poly> w;
        ModVec r = reduce(inputs_[i], &w);
        if (!r.is_zero()) continue;  // cannot happen: inputs generate the module
        std::map<int, Poly> coords;
        coords[i] = Poly::constant(nvars_, 1);
        for (const auto& [l, q] : w)
            for (const auto& [idx, f] : basis_[l].lift) coords[idx] = coords[idx] - q * f;
        ModVec v = to_modvec(coords);
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

SModuleGB::SModuleGB(const ConeRing& ring, const std::vector<ModVec>& inputs, int ambient,
                     bool track_witness)
    : ring_(&ring), ambient_(ambient), engine_(ring.nvars, ambient, track_witness, false) {
    for (const auto& v : inputs) {
        engine_.add_input(v);
        caller_of_input_.push_back(n_caller_++);
    }
    for (int pos = 0; pos < ambient; ++pos)
        for (const auto& q : ring.ideal_gb) {
            ModVec col;
            for (const auto& term : q.t) col = col + ModVec::term(pos, term.m, term.c);
            engine_.add_input(col);
            caller_of_input_.push_back(-1);
        }
    engine_.complete();
}

void SModuleGB::add(const ModVec& v) {
    engine_.add_input(v);
    caller_of_input_.push_back(n_caller_++);
    engine_.complete();
}

bool SModuleGB::contains(const ModVec& v, std::map<int, Poly>* witness) const {
    std::map<int, Poly> bw;
    ModVec r = engine_.reduce(v, witness ? &bw : nullptr);
    if (!r.is_zero()) return false;
    if (witness) {
        witness->clear();
        for (const auto& [l, q] : bw)
            for (const auto& [i, f] : engine_.basis()[l].lift) {
                int c = caller_of_input_[i];
                if (c >= 0) (*witness)[c] = (*witness)[c] + q * f;
            }
        for (auto it = witness->begin(); it != witness->end();)
            it = it->second.is_zero() ? witness->erase(it) : std::next(it);
    }
    return true;
}

std::vector<ModVec> syzygies_S(const ConeRing& ring, const std::vector<ModVec>& inputs,
                               int ambient) {
    BuchbergerEngine engine(ring.nvars, ambient, true, true);
    int m = static_cast<int>(inputs.size());
    for (const auto& v : inputs) engine.add_input(v);
    for (int pos = 0; pos < ambient; ++pos)
        for (const auto& q : ring.ideal_gb) {
            ModVec col;
            for (const auto& term : q.t) col = col + ModVec::term(pos, term.m, term.c);
            engine.add_input(col);
        }
    engine.complete();

    std::vector<ModVec> out;
    for (const auto& raw : engine.input_syzygies()) {
        ModVec proj;
        for (const auto& term : raw.t)
            if (term.pos < m) proj.t.push_back(term);
        if (proj.is_zero()) continue;
        ModVec v = ring.reduce_entries(proj);
        if (v.is_zero()) continue;
        make_primitive(v);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace zkinv
