#pragma once

#include <stdexcept>
#include <string>

namespace invograph {

// Failure classes surfaced to the CLI as distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad CSV rows, bad JSON, unparseable domains.
class ParseError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation's precondition (bad argument, missing data).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Input is well-formed but too degenerate for the requested statistic.
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

}  // namespace invograph
