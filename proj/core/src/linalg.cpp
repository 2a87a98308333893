#include "zkinv/linalg.hpp"

#include <algorithm>

namespace zkinv {

RankResult exact_rank(std::vector<std::vector<mpq_class>> a) {
    int nrows = static_cast<int>(a.size());
    int ncols = nrows ? static_cast<int>(a[0].size()) : 0;

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int sel = -1;
        for (int r = row; r < nrows; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        mpq_class inv = 1 / a[row][col];
        for (int c = col; c < ncols; ++c) a[row][c] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    RankResult out;
    out.rank = row;
    out.nullity = ncols - row;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(ncols, 0);
        v[free] = 1;
        for (int r = 0; r < out.rank; ++r) v[pivot_col[r]] = -a[r][free];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

namespace {

// Scales a sorted sparse row to integer entries with content 1, first
// coefficient positive.
void make_row_primitive(SparseRow& r) {
    if (r.empty()) return;
    mpz_class den_lcm = 1;
    for (const auto& [c, q] : r) {
        mpz_class d = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    std::vector<mpz_class> nums;
    nums.reserve(r.size());
    for (const auto& [c, q] : r) {
        mpq_class s = q * den_lcm;
        nums.push_back(s.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nums.back().get_mpz_t());
    }
    bool flip = nums.front() < 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class n = nums[i] / num_gcd;
        r[i].second = mpq_class(flip ? -n : n);
    }
}

// r*a - s*b on sorted rows, dropping cancellations.
SparseRow row_combine(const SparseRow& r, const mpq_class& a, const SparseRow& s,
                      const mpq_class& b) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() && j < s.size()) {
        if (r[i].first < s[j].first) {
            out.emplace_back(r[i].first, r[i].second * a);
            ++i;
        } else if (r[i].first > s[j].first) {
            out.emplace_back(s[j].first, -s[j].second * b);
            ++j;
        } else {
            mpq_class v = r[i].second * a - s[j].second * b;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.emplace_back(r[i].first, r[i].second * a);
    for (; j < s.size(); ++j) out.emplace_back(s[j].first, -s[j].second * b);
    return out;
}

}  // namespace

bool SparseEliminator::add_row(SparseRow r) {
    std::sort(r.begin(), r.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    // combine duplicate columns, drop zeros
    SparseRow clean;
    for (auto& [c, q] : r) {
        if (!clean.empty() && clean.back().first == c)
            clean.back().second += q;
        else
            clean.emplace_back(c, std::move(q));
    }
    clean.erase(std::remove_if(clean.begin(), clean.end(),
                               [](const auto& e) { return e.second == 0; }),
                clean.end());

    while (!clean.empty()) {
        auto it = rows_.find(clean.front().first);
        if (it == rows_.end()) {
            make_row_primitive(clean);
            rows_.emplace(clean.front().first, std::move(clean));
            ++rank_;
            return true;
        }
        clean = row_combine(clean, it->second.front().second, it->second, clean.front().second);
        if (!clean.empty()) make_row_primitive(clean);
    }
    return false;
}

}  // namespace zkinv
