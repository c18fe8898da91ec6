#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Invalid parameter, layout, or configuration value. The message names the
// offending field or constraint.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation not allowed in the current state (e.g. step budget exhausted).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Output could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qwalk
