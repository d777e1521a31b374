#pragma once

#include <stdexcept>
#include <string>

namespace misbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request exceeds a fixed capacity: bitset width, overflow guard, sweep cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition (vertex out of range, n too small, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (graph6 or edge list).
class FormatError : public Error {
public:
    using Error::Error;
};

/// An MIS count exceeded g(n). Either the theorem is false or there is a bug;
/// both deserve to stop the program.
class BoundViolation : public Error {
public:
    using Error::Error;
};

} // namespace misbound
