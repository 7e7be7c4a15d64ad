#pragma once

#include <stdexcept>
#include <string>

namespace fuzzn {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An input lies outside the declared domain of a function or set.
class DomainError : public Error {
public:
    using Error::Error;
};

// A shape evaluated to a value outside [0,1]; out-of-range results are
// rejected, never clamped.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A shape specification violates its structural invariants.
class InvalidShape : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// An operation requiring a minimum set level was called on a lower level.
class LevelError : public Error {
public:
    using Error::Error;
};

// The queried element does not appear in the set's support.
class NotInSupport : public Error {
public:
    using Error::Error;
};

// A membership-function stack rejected a support point produced by the
// level below it.
class InconsistentStack : public Error {
public:
    using Error::Error;
};

// A crisp world's member sets overlap or leave an outcome uncovered.
class PartitionError : public Error {
public:
    using Error::Error;
};

// A fuzzy world leaves an outcome landing in no member set.
class CoverageError : public Error {
public:
    using Error::Error;
};

class EmptyLog : public Error {
public:
    using Error::Error;
};

// An event specification violates its own invariants.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace fuzzn
