#pragma once

#include <stdexcept>
#include <string>

namespace lyndon {

/// Caller violated a documented precondition (bad index, empty range, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Data failed a structural check (unbalanced BPS, malformed file).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant of a builder was broken. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lyndon
