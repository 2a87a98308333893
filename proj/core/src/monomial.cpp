#include "zkinv/monomial.hpp"

namespace zkinv {

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "w" + std::to_string(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace zkinv
