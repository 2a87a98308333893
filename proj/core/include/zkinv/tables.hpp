#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zkinv {

// One tabulated bundle with its expected invariants.  Empty optionals are
// cells the tabulation leaves blank: computed and reported, never asserted.
struct TableRow {
    int k;
    int j;
    const char* p;
    std::optional<int> h1_end;
    std::optional<int> delta;
    std::optional<int> h1_minus_delta;
    std::optional<int> width;
    std::optional<int> height;
    bool instanton;
    // Printed h1 - delta kept separately for the one row where it disagrees
    // with the tabulated h1_end and delta; reported, not asserted.
    std::optional<int> h1_minus_delta_printed = std::nullopt;
};

const std::vector<TableRow>& invariant_table();

// "instanton" (j a multiple of k), "noninstanton", or "all", in table order.
std::vector<TableRow> table_suite(const std::string& suite);

}  // namespace zkinv
