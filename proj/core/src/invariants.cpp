#include "zkinv/invariants.hpp"

#include <chrono>

#include "zkinv/cech.hpp"
#include "zkinv/cohomology.hpp"
#include "zkinv/endo.hpp"
#include "zkinv/errors.hpp"
#include "zkinv/sections.hpp"

namespace zkinv {

namespace {

template <typename F>
auto timed(std::map<std::string, double>& ms, const std::string& key, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto value = f();
    auto t1 = std::chrono::steady_clock::now();
    ms[key] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return value;
}

}  // namespace

InvariantRecord compute_record(const BundleSpec& spec, const ReportOptions& opts) {
    BundleSpec s = normalized(spec);
    InvariantRecord rec;
    rec.k = s.k;
    rec.j = s.j;
    rec.p_raw = spec.p.str();
    rec.p_normalized = s.p.str();

    rec.width = timed(rec.ms, "width", [&] { return width(s); });
    rec.height = timed(rec.ms, "height", [&] { return height(s); });
    rec.chi_loc = rec.width + rec.height;

    if (opts.with_h1) rec.h1_end = timed(rec.ms, "h1_end", [&] { return h1_end(s); });
    if (opts.with_delta) rec.delta = timed(rec.ms, "delta", [&] { return delta(s); });
    if (rec.h1_end && rec.delta) {
        rec.h1_minus_delta = *rec.h1_end - *rec.delta;
        // k*((h1 - delta) - j) + 2*j == 2*k*(width + height), cross-multiplied
        long lhs = static_cast<long>(s.k) * (*rec.h1_minus_delta - s.j) + 2L * s.j;
        long rhs = 2L * s.k * rec.chi_loc;
        rec.conjecture_match = lhs == rhs;
    }

    if (opts.oracle) {
        int oracle_height = timed(rec.ms, "height_oracle", [&] { return cech_height_oracle(s); });
        if (oracle_height != rec.height)
            throw OracleMismatchError("height " + std::to_string(rec.height) +
                                      " disagrees with cocycle oracle " +
                                      std::to_string(oracle_height));
        if (rec.h1_end) {
            int oracle_h1 = timed(rec.ms, "h1_end_oracle", [&] { return cech_h1_end_oracle(s); });
            if (oracle_h1 != *rec.h1_end)
                throw OracleMismatchError("h1_end " + std::to_string(*rec.h1_end) +
                                          " disagrees with cocycle oracle " +
                                          std::to_string(oracle_h1));
        }
    }
    return rec;
}

}  // namespace zkinv
