#pragma once

#include <stdexcept>
#include <string>

namespace softtop {

/// Base class for every error raised on bad user input.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different universes.
class UniverseMismatch : public Error
{
public:
    using Error::Error;
};

/// A point or parameter label (or index) does not belong to the universe.
class UnknownLabel : public Error
{
public:
    using Error::Error;
};

/// A family of soft sets fails one of the soft topology axioms.
class TopologyViolation : public Error
{
public:
    using Error::Error;
};

/// An operation that needs a soft T0U space was handed something else.
class NotT0U : public Error
{
public:
    using Error::Error;
};

/// A precondition on a mapping (continuity, T0 target, ...) does not hold.
class MappingPrecondition : public Error
{
public:
    using Error::Error;
};

/// Malformed document text or command line input.
class ParseError : public Error
{
public:
    using Error::Error;
};

/// A proven invariant failed to hold. Always a bug in this library.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace softtop
