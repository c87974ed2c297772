#pragma once

#include <stdexcept>
#include <string>

namespace birkhoff {

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A randomized construction could not be completed for these parameters.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A postcondition check failed; indicates a bug rather than bad input.
class AssertionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) {
        throw AssertionFailure(what);
    }
}

}  // namespace birkhoff
