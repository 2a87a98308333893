#include "zkinv/bundle.hpp"

#include "zkinv/errors.hpp"

namespace zkinv {

void validate(const BundleSpec& spec) {
    if (spec.k < 1) throw InvalidKError("k must be >= 1, got " + std::to_string(spec.k));
    if (spec.j < 0) throw InvalidJError("j must be >= 0, got " + std::to_string(spec.j));
    if (spec.j == 0 && !spec.p.is_zero())
        throw NonzeroPForJZeroError("j = 0 admits only p = 0, got p = " + spec.p.str());
    for (const auto& [e, c] : spec.p.terms())
        if (e.r == 0)
            throw IllPosedError("p must be divisible by u; offending term has u-exponent 0 in p = " +
                                spec.p.str());
}

bool in_canonical_window(int k, int j, int s, int r) {
    if (r < 1 || r > floor_div(2 * j - 2, k)) return false;
    return s >= k * r - j + 1 && s <= j - 1;
}

LaurentPoly normalize_p(const BundleSpec& spec) {
    LaurentPoly out;
    for (const auto& [e, c] : spec.p.terms())
        if (in_canonical_window(spec.k, spec.j, e.s, e.r)) out.set_coeff(e.s, e.r, c);
    return out;
}

BundleSpec normalized(BundleSpec spec) {
    validate(spec);
    spec.p = normalize_p(spec);
    return spec;
}

std::pair<LaurentPoly, LaurentPoly> apply_transition(const BundleSpec& spec,
                                                     const LaurentPoly& a,
                                                     const LaurentPoly& b) {
    return {a.shifted(spec.j, 0) + spec.p * b, b.shifted(-spec.j, 0)};
}

}  // namespace zkinv
