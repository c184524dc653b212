#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Requested computation would exceed the configured degree/memory cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed (exact division left a remainder,
// 64-bit arithmetic overflowed, or a kernel evaluation produced an
// impossible state). Always a defect, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// No modular inverse exists for the given arguments.
class NoInverseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computed value violated a bound that is guaranteed to hold; aborting
// is preferable to persisting wrong results.
class BoundViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyclo
