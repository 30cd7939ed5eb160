#pragma once

#include <stdexcept>
#include <string>

namespace hexanet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value that must stay nonzero vanished. `where` names the exact vertex
// subset, face pair or minor spec that died, so genericity failures are
// debuggable instead of being a bare division-by-zero.
struct NonGenericError : Error {
    explicit NonGenericError(const std::string& where)
        : Error("non-generic input: " + where), position(where) {}
    std::string position;
};

struct ZeroCofactorError : Error {
    explicit ZeroCofactorError(const std::string& where)
        : Error("zero cofactor while solving: " + where), position(where) {}
    std::string position;
};

struct NotNormalizedError : Error {
    NotNormalizedError() : Error("network is not normalized: F(v0) != 1") {}
};

struct RingMismatchError : Error {
    RingMismatchError() : Error("mixed-ring arithmetic is not allowed; embed explicitly") {}
};

struct BoundExceededError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace hexanet
