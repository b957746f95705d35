#pragma once

#include <stdexcept>
#include <string>

namespace ninepoint {

// Every contract violation in the library throws Error with a stable
// message prefix that callers (and tests) can match on.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a certified numeric comparison stays undecided after
// escalating to the maximum allowed precision.
class UndecidableError : public Error {
public:
    UndecidableError(const std::string& what, unsigned bits)
        : Error(what + " (undecidable at precision " + std::to_string(bits) + ")"),
          bits_(bits) {}
    unsigned bits() const { return bits_; }

private:
    unsigned bits_;
};

}  // namespace ninepoint
