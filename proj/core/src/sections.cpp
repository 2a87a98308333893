#include "zkinv/sections.hpp"

#include <algorithm>

#include "zkinv/errors.hpp"

namespace zkinv {

std::string coeff_name(const CoefficientId& id) {
    std::string out = id.family == CoeffFamily::A ? "a(" : "b(";
    return out + std::to_string(id.r) + "," + std::to_string(id.s) + ")";
}

namespace {

void add_lf(LinearForm& dst, const LinearForm& src, const mpq_class& scale) {
    for (const auto& [id, c] : src) {
        mpq_class v = dst[id] + c * scale;
        if (v == 0)
            dst.erase(id);
        else
            dst[id] = v;
    }
}

}  // namespace

GenericSections build_generic_sections(const BundleSpec& spec) {
    GenericSections out;
    out.spec = spec;
    const int k = spec.k;
    const int j = spec.j;

    auto add_entry = [](SymbolicPoly& sp, CoeffFamily fam, int r, int s) {
        sp[BiExp{r, s}][CoefficientId{fam, r, s}] = 1;
    };

    if (spec.p.is_zero()) {
        out.a_max = ceil_div(j, k);
        out.b_max = 0;
        for (int r = 0; r <= out.a_max; ++r)
            for (int s = 0; s <= k * r - j; ++s) add_entry(out.a, CoeffFamily::A, r, s);
        for (int s = 0; s <= j; ++s) add_entry(out.b, CoeffFamily::B, 0, s);
    } else {
        DegreeExtrema ex = *spec.p.extrema();
        out.a_max = std::max(ceil_div(j, k), ex.max_u) + ex.min_u;
        out.b_max = out.a_max - ex.min_u;
        for (int r = 0; r < ex.min_u; ++r)
            for (int s = 0; s <= k * r - j; ++s) add_entry(out.a, CoeffFamily::A, r, s);
        for (int r = ex.min_u; r <= out.a_max; ++r) {
            int cap = std::max(k * r - j, k * (r - ex.min_u) + j + std::max(ex.max_z, 0));
            for (int s = 0; s <= cap; ++s) add_entry(out.a, CoeffFamily::A, r, s);
        }
        for (int r = 0; r <= out.b_max; ++r)
            for (int s = 0; s <= k * r + j; ++s) add_entry(out.b, CoeffFamily::B, r, s);
    }

    for (const auto& [be, lf] : out.b) out.variables.push_back(lf.begin()->first);
    for (const auto& [be, lf] : out.a) out.variables.push_back(lf.begin()->first);
    return out;
}

std::vector<SectionRelation> get_relations(const GenericSections& gs) {
    const int k = gs.spec.k;
    const int j = gs.spec.j;

    // Transport to the second chart: z^j*a + p*b, tracked symbolically.
    SymbolicPoly ftv;
    for (const auto& [be, lf] : gs.a) add_lf(ftv[BiExp{be.r, be.s + j}], lf, 1);
    for (const auto& [pbe, pc] : gs.spec.p.terms())
        for (const auto& [be, lf] : gs.b) add_lf(ftv[BiExp{be.r + pbe.r, be.s + pbe.s}], lf, pc);

    std::vector<SectionRelation> out;
    for (const auto& [be, lf] : ftv) {
        if (lf.empty() || be.s <= k * be.r) continue;  // holomorphic on the second chart

        CoefficientId pivot{};
        bool have_a = false;
        for (const auto& [id, c] : lf)
            if (id.family == CoeffFamily::A) {
                pivot = id;
                have_a = true;
                break;
            }
        if (!have_a) pivot = std::prev(lf.end())->first;  // largest B coefficient

        SectionRelation rel{be, lf, pivot};
        mpq_class inv = 1 / rel.f.at(pivot);
        if (inv != 1)
            for (auto& [id, c] : rel.f) c *= inv;
        out.push_back(std::move(rel));
    }
    return out;
}

SolvedSections solve_relations(GenericSections gs, const std::vector<SectionRelation>& rels) {
    // pivot -> monic linear form (pivot included with coefficient 1), kept
    // fully reduced against one another.
    std::map<CoefficientId, LinearForm> solved;

    auto substitute = [&](LinearForm f) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [id, c] : f) {
                auto it = solved.find(id);
                if (it == solved.end()) continue;
                add_lf(f, it->second, -c);
                changed = true;
                break;
            }
        }
        return f;
    };

    for (const auto& rel : rels) {
        LinearForm f = substitute(rel.f);
        if (f.empty()) continue;
        CoefficientId pivot = f.count(rel.pivot) ? rel.pivot : std::prev(f.end())->first;
        mpq_class inv = 1 / f.at(pivot);
        if (inv != 1)
            for (auto& [id, c] : f) c *= inv;
        for (auto& [pv, lf] : solved) {
            auto it = lf.find(pivot);
            if (it != lf.end()) add_lf(lf, f, -it->second);
        }
        solved.emplace(pivot, std::move(f));
    }

    SolvedSections out;
    for (auto* sp : {&gs.a, &gs.b})
        for (auto& [be, lf] : *sp) lf = substitute(lf);
    for (const auto& id : gs.variables)
        if (!solved.count(id)) out.free_coeffs.push_back(id);
    out.sections = std::move(gs);
    return out;
}

Monomial pi_star(const ConeRing& ring, int s, int r) {
    if (s < 0 || s > ring.k * r)
        throw NotConvertibleError("z^" + std::to_string(s) + "*u^" + std::to_string(r) +
                                  " does not descend to the cone ring");
    Monomial m = Monomial::one(ring.nvars);
    int deg_z = s;
    int deg_u = r;
    for (int d = ring.k; d >= 1; --d) {
        int e = deg_z / d;
        if (e == 0) continue;
        m.e[d] = static_cast<int16_t>(e);
        deg_u -= e;
        deg_z -= e * d;
    }
    m.e[0] = static_cast<int16_t>(deg_u);
    m.deg = static_cast<int16_t>(r);
    return m;
}

SectionModule make_module(const SolvedSections& solved) {
    const BundleSpec& spec = solved.sections.spec;
    const int k = spec.k;

    int deficit = 0;
    for (const auto* sp : {&solved.sections.a, &solved.sections.b})
        for (const auto& [be, lf] : *sp)
            if (!lf.empty()) deficit = std::max(deficit, be.s - k * be.r);
    int uexp = ceil_div(deficit, k);

    SectionModule sm;
    sm.ring = std::make_shared<ConeRing>(k);
    sm.uexp = uexp;
    sm.module = {sm.ring.get(), 2, {}};

    for (const auto& id : solved.free_coeffs) {
        ModVec col;
        int pos = 0;
        for (const auto* sp : {&solved.sections.a, &solved.sections.b}) {
            for (const auto& [be, lf] : *sp) {
                auto it = lf.find(id);
                if (it == lf.end()) continue;
                col = col + ModVec::term(pos, pi_star(*sm.ring, be.s, be.r + uexp), it->second);
            }
            ++pos;
        }
        sm.sources.push_back(id);
        sm.module.gens.push_back(std::move(col));
    }
    return sm;
}

int width(const BundleSpec& spec, const ComputeOptions& opts) {
    BundleSpec s = opts.normalize ? normalized(spec) : spec;
    if (!opts.normalize) validate(s);
    GenericSections gs = build_generic_sections(s);
    std::vector<SectionRelation> rels = get_relations(gs);
    SolvedSections sol = solve_relations(std::move(gs), rels);
    SectionModule sm = make_module(sol);
    std::vector<ModVec> pruned = prune_generators(*sm.ring, sm.module.gens, 2);
    return static_cast<int>(eval_and_coker_length({sm.ring.get(), 2, pruned}));
}

}  // namespace zkinv
