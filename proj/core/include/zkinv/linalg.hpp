#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace zkinv {

struct RankResult {
    int rank = 0;
    int nullity = 0;
    std::vector<std::vector<mpq_class>> nullspace;  // one basis vector per free column
};

// Rank and nullspace of an exact rational matrix (row-major, rectangular).
RankResult exact_rank(std::vector<std::vector<mpq_class>> a);

// Incremental exact elimination for sparse systems.  Rows are sorted
// (column, coefficient) lists; stored rows are kept integer and primitive to
// bound coefficient growth.
using SparseRow = std::vector<std::pair<int, mpq_class>>;

class SparseEliminator {
public:
    // Reduces r against the echelon; installs the remainder when nonzero.
    // Returns true iff the rank increased.
    bool add_row(SparseRow r);
    int rank() const { return rank_; }

private:
    std::map<int, SparseRow> rows_;  // pivot column -> row
    int rank_ = 0;
};

}  // namespace zkinv
