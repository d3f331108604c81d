#pragma once

#include <stdexcept>
#include <string>

namespace sgs {

/// Malformed input: bad text, out-of-range vertex, violated precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A desk-scale cap (cyclomatic number, vertex count) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sgs
