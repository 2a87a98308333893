#include "zkinv/cohomology.hpp"

#include <algorithm>
#include <set>

#include "zkinv/linalg.hpp"

namespace zkinv {

std::vector<BiExp> canonical_cocycles(int k, int m) {
    std::vector<BiExp> out;
    for (int r = 0; k * r <= m - 2; ++r)
        for (int s = k * r - m + 1; s <= -1; ++s) out.push_back({r, s});
    return out;
}

WindowBasis window_relations(const WindowProblem& problem, TwistStage stage) {
    const int k = problem.k;
    const int m = problem.m;

    // Bidegree -> correction coefficients reaching it through q.
    std::map<BiExp, BLinearForm> image;
    for (const auto& beta : problem.corrections)
        for (const auto& [qt, qc] : problem.q.terms())
            image[BiExp{beta.r + qt.r, beta.s + qt.s}][beta] += qc;
    for (auto& [be, lf] : image)
        for (auto it = lf.begin(); it != lf.end();)
            it = it->second == 0 ? lf.erase(it) : std::next(it);

    WindowBasis out;
    for (const auto& cand : canonical_cocycles(k, m)) {
        auto hit = image.find(cand);
        if (hit == image.end() || hit->second.empty()) {
            out.kept.push_back(cand);  // never reached: independent generator
            continue;
        }

        // Full transport of the correction monomials feeding this candidate.
        std::map<BiExp, BLinearForm> entries;
        for (const auto& [beta, bc] : hit->second)
            for (const auto& [qt, qc] : problem.q.terms())
                entries[BiExp{beta.r + qt.r, beta.s + qt.s}][beta] += qc * bc;
        for (auto& [be, lf] : entries)
            for (auto it = lf.begin(); it != lf.end();)
                it = it->second == 0 ? lf.erase(it) : std::next(it);

        BLinearForm candidate_part = entries[cand];
        entries.erase(cand);

        // Drop first-chart-holomorphic terms, then keep only terms failing the
        // second-chart test at the chosen stage.
        std::map<BiExp, BLinearForm> leftovers;
        for (auto& [be, lf] : entries) {
            if (lf.empty() || be.s >= 0) continue;
            bool obstructs = stage == TwistStage::Twisted ? (be.s + m > k * be.r)
                                                          : (be.s > k * be.r);
            if (obstructs) leftovers.emplace(be, std::move(lf));
        }

        if (leftovers.empty()) continue;  // the candidate's class vanishes

        out.kept.push_back(cand);
        WindowRelation rel{cand, std::move(leftovers)};
        rel.entries[cand] = std::move(candidate_part);
        out.relations.push_back(std::move(rel));
    }
    return out;
}

int fix_height_relations(const WindowBasis& basis) {
    std::set<BiExp> gens(basis.kept.begin(), basis.kept.end());

    // Specialize at each correction coefficient and dedupe the normalized
    // results; entries at dropped candidates are zero classes and vanish.
    std::set<std::vector<std::pair<BiExp, mpq_class>>> seen;
    for (const auto& rel : basis.relations) {
        std::set<BiExp> betas;
        for (const auto& [be, lf] : rel.entries)
            for (const auto& [beta, c] : lf) betas.insert(beta);
        for (const auto& beta : betas) {
            std::vector<std::pair<BiExp, mpq_class>> row;
            for (const auto& [be, lf] : rel.entries) {
                if (!gens.count(be)) continue;
                auto it = lf.find(beta);
                if (it != lf.end() && it->second != 0) row.emplace_back(be, it->second);
            }
            if (row.empty()) continue;
            mpq_class inv = 1 / row.front().second;
            if (inv != 1)
                for (auto& [be, c] : row) c *= inv;
            seen.insert(std::move(row));
        }
    }
    std::vector<std::map<BiExp, mpq_class>> rels;
    for (const auto& row : seen) rels.emplace_back(row.begin(), row.end());

    // Single-monomial relations force their generator to zero; cascade.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rel : rels)
            if (rel.size() == 1) {
                BiExp dead = rel.begin()->first;
                gens.erase(dead);
                for (auto& other : rels) other.erase(dead);
                rels.erase(std::remove_if(rels.begin(), rels.end(),
                                          [](const auto& r) { return r.empty(); }),
                           rels.end());
                changed = true;
                break;
            }
    }

    if (rels.empty()) return static_cast<int>(gens.size());

    // Remaining relations may overlap; the quotient dimension needs their rank.
    std::map<BiExp, int> col;
    for (const auto& g : gens) col.emplace(g, static_cast<int>(col.size()));
    std::vector<std::vector<mpq_class>> mat;
    for (const auto& rel : rels) {
        std::vector<mpq_class> row(col.size(), 0);
        for (const auto& [be, c] : rel) row[col.at(be)] = c;
        mat.push_back(std::move(row));
    }
    return static_cast<int>(gens.size()) - exact_rank(std::move(mat)).rank;
}

std::vector<BiExp> height_corrections(const BundleSpec& spec) {
    std::vector<BiExp> out;
    if (spec.p.is_zero()) return out;
    int min_u = spec.p.extrema()->min_u;
    int rmax = floor_div(spec.j - 2, spec.k) - min_u;
    for (int r = 0; r <= rmax; ++r)
        for (int s = -spec.j; s <= spec.k * r; ++s) out.push_back({r, s});
    return out;
}

int height(const BundleSpec& spec, const HeightOptions& opts) {
    BundleSpec s = opts.normalize ? normalized(spec) : spec;
    if (!opts.normalize) validate(s);
    std::vector<BiExp> candidates = canonical_cocycles(s.k, s.j);
    if (s.p.is_zero() || candidates.empty()) return static_cast<int>(candidates.size());
    WindowProblem problem{s.k, s.j, s.p, height_corrections(s)};
    return fix_height_relations(window_relations(problem, opts.stage));
}

}  // namespace zkinv
