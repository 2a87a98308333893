#pragma once

#include <map>
#include <optional>
#include <string>

#include "zkinv/bundle.hpp"

namespace zkinv {

struct ReportOptions {
    bool with_h1 = true;
    bool with_delta = true;
    bool oracle = false;  // cross-check height and h1_end against the cocycle oracle
};

struct InvariantRecord {
    int k = 1;
    int j = 0;
    std::string p_raw;
    std::string p_normalized;
    int width = 0;
    int height = 0;
    int chi_loc = 0;
    std::optional<int> h1_end;
    std::optional<int> delta;
    std::optional<int> h1_minus_delta;
    // k*(h1_end - delta - j) + 2*j == 2*k*(width + height), reported only
    std::optional<bool> conjecture_match;
    std::map<std::string, double> ms;
};

InvariantRecord compute_record(const BundleSpec& spec, const ReportOptions& opts = {});

}  // namespace zkinv
