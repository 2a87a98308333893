#pragma once

#include <stdexcept>
#include <string>

namespace zkinv {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial input; `position` is a 0-based offset into the source string.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Bundle data that does not define a valid extension: p != 0 but u does not divide p.
struct IllPosedError : Error {
    using Error::Error;
};

struct InvalidKError : Error {
    using Error::Error;
};

struct InvalidJError : Error {
    using Error::Error;
};

// j = 0 forces the trivial extension; a nonzero p is rejected rather than silently dropped.
struct NonzeroPForJZeroError : Error {
    using Error::Error;
};

// A z^s u^r monomial with s > k*r has no preimage on the cone.
struct NotConvertibleError : Error {
    using Error::Error;
};

// An iterated computation hit its window/level cap without two (or three) consecutive
// agreeing values.
struct NoStabilizationError : Error {
    using Error::Error;
};

// A cokernel expected to be a finite-dimensional vector space is not.
struct InfiniteLengthError : Error {
    using Error::Error;
};

// The independent truncated-cocycle computation disagrees with the algorithm.
struct OracleMismatchError : Error {
    using Error::Error;
};

}  // namespace zkinv
