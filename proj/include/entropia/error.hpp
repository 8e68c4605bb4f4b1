// error.hpp
// Exception types shared by every entropia module.
#pragma once

#include <stdexcept>
#include <string>

namespace entropia {

/// Argument outside an operation's domain (n = 0, invalid distribution, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds what the implementation supports.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Codeword lengths that violate the Kraft inequality.
class InfeasibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Sieve cache file failed magic, version, size or checksum verification.
class CorruptCacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation not valid in the object's current state (e.g. answering a finished game).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace entropia
