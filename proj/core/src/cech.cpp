#include "zkinv/cech.hpp"

#include <algorithm>

#include "zkinv/errors.hpp"
#include "zkinv/linalg.hpp"

namespace zkinv {

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m;
    m.n = n;
    m.a.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m.a[i][i] = LaurentPoly::constant(1);
    return m;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    LaurentMatrix out;
    out.n = n;
    out.a.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) out.a[i][l] += a[i][m] * o.a[m][l];
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            if (!(a[i][l] == o.a[i][l])) return false;
    return true;
}

namespace {

LaurentPoly det_of(const std::vector<std::vector<LaurentPoly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    LaurentPoly out;
    for (int i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        LaurentPoly cof = m[i][0] * det_of(minor);
        out += i % 2 ? -cof : cof;
    }
    return out;
}

}  // namespace

LaurentPoly LaurentMatrix::det() const { return det_of(a); }

LaurentMatrix LaurentMatrix::inverse() const {
    LaurentPoly d = det();
    if (d.term_count() != 1)
        throw Error("matrix determinant is not a single term; cannot invert on the overlap");
    auto [dbe, dc] = *d.terms().begin();
    if (dbe.r != 0)
        throw Error("matrix determinant has nonzero u-degree; cannot invert on the overlap");

    LaurentMatrix out;
    out.n = n;
    out.a.assign(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            std::vector<std::vector<LaurentPoly>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == l) continue;
                std::vector<LaurentPoly> row;
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = n == 1 ? LaurentPoly::constant(1) : det_of(minor);
            if ((i + l) % 2) cof = -cof;
            // divide by the single-term determinant
            LaurentPoly entry;
            for (const auto& [be, c] : cof.terms())
                entry.set_coeff(be.s - dbe.s, be.r - dbe.r, c / dc);
            out.a[i][l] = std::move(entry);
        }
    return out;
}

std::string LaurentMatrix::str() const {
    std::string out = "[";
    for (int i = 0; i < n; ++i) {
        if (i) out += "; ";
        for (int l = 0; l < n; ++l) {
            if (l) out += ", ";
            out += a[i][l].str();
        }
    }
    return out + "]";
}

LaurentMatrix bundle_transition(const BundleSpec& spec) {
    LaurentMatrix t;
    t.n = 2;
    t.a.assign(2, std::vector<LaurentPoly>(2));
    t.a[0][0] = LaurentPoly(1, spec.j, 0);
    t.a[0][1] = spec.p;
    t.a[1][1] = LaurentPoly(1, -spec.j, 0);
    return t;
}

LaurentMatrix bundle_transition_inverse(const BundleSpec& spec) {
    LaurentMatrix t;
    t.n = 2;
    t.a.assign(2, std::vector<LaurentPoly>(2));
    t.a[0][0] = LaurentPoly(1, -spec.j, 0);
    t.a[0][1] = -spec.p;
    t.a[1][1] = LaurentPoly(1, spec.j, 0);
    return t;
}

namespace {

struct WindowShape {
    int R = 0;  // u-degrees 0..R
    int Z = 0;  // z-degrees -Z..Z
};

// Rank of the coboundary span plus the box classes, minus the coboundary
// rank: the dimension the box classes retain modulo coboundaries.
int window_dimension(const LaurentMatrix& t_inv, int k, const CechParams& params,
                     const WindowShape& w) {
    const int n = t_inv.n;
    const int zspan = 2 * w.Z + 1;
    auto coord = [&](int slot, int r, int s) { return (slot * (w.R + 1) + r) * zspan + (s + w.Z); };

    SparseEliminator elim;

    // First-chart-holomorphic generators: unit columns at s >= 0.
    for (int slot = 0; slot < n; ++slot)
        for (int r = 0; r <= w.R; ++r)
            for (int s = 0; s <= w.Z; ++s) elim.add_row({{coord(slot, r, s), 1}});

    // Second-chart generators carried into the first frame; a column leaving
    // the window is discarded rather than truncated.
    int spread_z = 0;
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            if (auto ex = t_inv.a[i][l].extrema())
                spread_z = std::max({spread_z, std::abs(ex->min_z), std::abs(ex->max_z)});
    const int a_cap = k * w.R + w.Z + spread_z;
    for (int slot = 0; slot < n; ++slot)
        for (int b = 0; b <= w.R; ++b)
            for (int aexp = 0; aexp <= a_cap; ++aexp) {
                // w^a v^b on the second chart is z^(k b - a) u^b on the first
                LaurentPoly vmono(1, k * b - aexp, b);
                SparseRow row;
                bool inside = true;
                for (int l = 0; l < n && inside; ++l) {
                    LaurentPoly img = t_inv.a[l][slot] * vmono;
                    for (const auto& [be, c] : img.terms()) {
                        if (be.r < 0 || be.r > w.R || be.s < -w.Z || be.s > w.Z) {
                            inside = false;
                            break;
                        }
                        row.emplace_back(coord(l, be.r, be.s), c);
                    }
                }
                if (inside && !row.empty()) elim.add_row(std::move(row));
            }

    // Box classes: new pivots are dimensions surviving modulo coboundaries.
    int dim = 0;
    for (int slot = 0; slot < n; ++slot)
        for (int r = 0; r <= params.box_r && r <= w.R; ++r)
            for (int s = -params.box_s; s <= -1; ++s)
                if (s >= -w.Z && elim.add_row({{coord(slot, r, s), 1}})) ++dim;
    return dim;
}

}  // namespace

int cech_h1_truncated(const LaurentMatrix& t_inv, int k, const CechParams& params) {
    if (params.box_r < 0 || params.box_s < 1) return 0;

    int spread_z = 0, spread_u = 0;
    for (int i = 0; i < t_inv.n; ++i)
        for (int l = 0; l < t_inv.n; ++l)
            if (auto ex = t_inv.a[i][l].extrema()) {
                spread_z = std::max({spread_z, std::abs(ex->min_z), std::abs(ex->max_z)});
                spread_u = std::max(spread_u, ex->max_u);
            }

    WindowShape w;
    w.R = params.box_r + spread_u + params.margin;
    w.Z = params.box_s + k * w.R + spread_z + params.margin;

    int prev = -1;
    for (int step = 0; step <= params.max_grow; ++step) {
        int dim = window_dimension(t_inv, k, params, w);
        if (dim == prev) return dim;
        prev = dim;
        w.R += 1;
        w.Z += k + spread_z + 1;
    }
    throw NoStabilizationError("truncated cocycle dimension did not stabilize after " +
                               std::to_string(params.max_grow) + " window growths");
}

int cech_height_oracle(const BundleSpec& spec) {
    BundleSpec s = normalized(spec);
    CechParams params;
    params.box_r = std::max(0, floor_div(s.j - 2, s.k));
    params.box_s = std::max(1, s.j - 1);
    return cech_h1_truncated(bundle_transition_inverse(s), s.k, params);
}

}  // namespace zkinv
