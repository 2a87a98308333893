#include "zkinv/endo.hpp"

#include <algorithm>

#include "zkinv/errors.hpp"
#include "zkinv/linalg.hpp"

namespace zkinv {

LaurentMatrix end_transition(const BundleSpec& spec) {
    const int j = spec.j;
    const LaurentPoly& p = spec.p;
    LaurentMatrix s;
    s.n = 4;
    s.a.assign(4, std::vector<LaurentPoly>(4));
    s.a[0][0] = LaurentPoly::constant(1);
    s.a[0][1] = p.shifted(j, 0);
    s.a[0][2] = p.shifted(-j, 0);
    s.a[0][3] = p * p;
    s.a[1][1] = LaurentPoly(1, 2 * j, 0);
    s.a[1][3] = p.shifted(j, 0);
    s.a[2][2] = LaurentPoly(1, -2 * j, 0);
    s.a[2][3] = p.shifted(-j, 0);
    s.a[3][3] = LaurentPoly::constant(1);
    return s;
}

LaurentMatrix end_transition_inverse(const BundleSpec& spec) {
    const int j = spec.j;
    const LaurentPoly& p = spec.p;
    LaurentMatrix s;
    s.n = 4;
    s.a.assign(4, std::vector<LaurentPoly>(4));
    s.a[0][0] = LaurentPoly::constant(1);
    s.a[0][1] = -p.shifted(-j, 0);
    s.a[0][2] = -p.shifted(j, 0);
    s.a[0][3] = p * p;
    s.a[1][1] = LaurentPoly(1, -2 * j, 0);
    s.a[1][3] = -p.shifted(-j, 0);
    s.a[2][2] = LaurentPoly(1, 2 * j, 0);
    s.a[2][3] = -p.shifted(j, 0);
    s.a[3][3] = LaurentPoly::constant(1);
    return s;
}

std::vector<BiExp> end_corrections(const BundleSpec& spec) {
    std::vector<BiExp> out;
    if (spec.p.is_zero()) return out;
    int min_u = spec.p.extrema()->min_u;
    int rmax = floor_div(2 * spec.j - 2, spec.k) - min_u;
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= spec.k * r; ++s) out.push_back({r, s});
    return out;
}

int h1_end(const BundleSpec& spec, const HeightOptions& opts) {
    BundleSpec s = opts.normalize ? normalized(spec) : spec;
    if (!opts.normalize) validate(s);
    std::vector<BiExp> candidates = canonical_cocycles(s.k, 2 * s.j);
    if (s.p.is_zero() || candidates.empty()) return static_cast<int>(candidates.size());
    WindowProblem problem{s.k, 2 * s.j, s.p.shifted(-s.j, 0), end_corrections(s)};
    return fix_height_relations(window_relations(problem, opts.stage));
}

int cech_h1_end_oracle(const BundleSpec& spec) {
    BundleSpec s = normalized(spec);
    CechParams params;
    params.box_r = std::max(0, floor_div(2 * s.j - 2, s.k));
    params.box_s = std::max(1, 2 * s.j - 1);
    return cech_h1_truncated(end_transition_inverse(s), s.k, params);
}

long h0_end(const BundleSpec& spec, int n) {
    validate(spec);
    if (spec.j < 1) throw InvalidJError("h0_end requires twist j >= 1");
    if (n < 0) throw IllPosedError("neighborhood order must be >= 0");
    const int k = spec.k;
    const int j = spec.j;
    const LaurentPoly& p = spec.p;
    const LaurentPoly p2 = p * p;

    // Slot variables on the first chart, truncated at u-degree n.
    int nvar = 0;
    std::map<std::pair<int, BiExp>, int> var_id;
    auto declare = [&](int slot, int r, int smax) {
        for (int s = 0; s <= smax; ++s) var_id[{slot, BiExp{r, s}}] = nvar++;
    };
    for (int r = 0; r <= n; ++r) {
        declare(0, r, k * r + 2 * j - 1);
        declare(1, r, k * r - 1);
        declare(2, r, k * r + 2 * j);
        declare(3, r, k * r);
    }

    // Transported slots; monomials beyond u-degree n fall out of the
    // neighborhood and monomials past the second-chart cone line give one
    // relation each.
    std::map<std::pair<int, BiExp>, std::map<int, mpq_class>> eqs;
    auto add = [&](int slot, int r, int s, int var, const mpq_class& c) {
        if (r > n || s <= k * r) return;
        eqs[{slot, BiExp{r, s}}][var] += c;
    };
    for (const auto& [key, var] : var_id) {
        const auto& [slot, be] = key;
        switch (slot) {
            case 0:
                add(0, be.r, be.s, var, 1);
                break;
            case 1:
                add(1, be.r, be.s + 2 * j, var, 1);
                for (const auto& [pt, pc] : p.terms())
                    add(0, be.r + pt.r, be.s + pt.s + j, var, pc);
                break;
            case 2:
                add(2, be.r, be.s - 2 * j, var, 1);
                for (const auto& [pt, pc] : p.terms())
                    add(0, be.r + pt.r, be.s + pt.s - j, var, pc);
                break;
            case 3:
                add(3, be.r, be.s, var, 1);
                for (const auto& [pt, pc] : p.terms()) {
                    add(1, be.r + pt.r, be.s + pt.s + j, var, pc);
                    add(2, be.r + pt.r, be.s + pt.s - j, var, pc);
                }
                for (const auto& [pt, pc] : p2.terms()) add(0, be.r + pt.r, be.s + pt.s, var, pc);
                break;
        }
    }

    SparseEliminator elim;
    for (const auto& [key, row] : eqs) {
        SparseRow r;
        for (const auto& [var, c] : row)
            if (c != 0) r.emplace_back(var, c);
        if (!r.empty()) elim.add_row(std::move(r));
    }
    return nvar - elim.rank();
}

long h0_end_split(int k, int j, int n) {
    if (j < 1) throw InvalidJError("h0_end requires twist j >= 1");
    long total = 0;
    for (int r = 0; r <= n; ++r) {
        total += (k * r + 1) + (k * r + 2 * j + 1) + (k * r + 1);
        total += std::max(0, k * r - 2 * j + 1);
    }
    return total;
}

int delta(const BundleSpec& spec, const ComputeOptions& opts) {
    BundleSpec s = opts.normalize ? normalized(spec) : spec;
    if (!opts.normalize) validate(s);
    if (s.p.is_zero()) return 0;

    const int n0 = s.p.extrema()->max_u + ceil_div(2 * s.j, s.k);
    constexpr int kMaxBeyond = 32;
    long prev = -1;
    int run = 0;
    for (int n = n0; n <= n0 + kMaxBeyond; ++n) {
        long d = h0_end_split(s.k, s.j, n) - h0_end(s, n);
        if (d == prev) {
            if (++run == 2) return static_cast<int>(d);
        } else {
            run = 0;
        }
        prev = d;
    }
    throw NoStabilizationError("h0_end difference did not stabilize within " +
                               std::to_string(kMaxBeyond) + " neighborhoods past the cutoff");
}

}  // namespace zkinv
