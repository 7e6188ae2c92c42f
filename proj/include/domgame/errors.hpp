#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Bad vertex ids, self-loops, duplicate edge additions.
class InvalidGraph : public Error
{
public:
    using Error::Error;
};

/// A graph or request is larger than a configured or hard cap.
class CapacityExceeded : public Error
{
public:
    using Error::Error;
};

/// The solver hit its memo-table limit.
class SolverAborted : public Error
{
public:
    using Error::Error;
};

/// A move or argument violates an operation's precondition.
class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// Malformed edge-list or graph6 input.
class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace domgame
