#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid user input: malformed groups, tuples, files.
class InputError : public Error {
public:
    using Error::Error;
};

// Prym datum validation failures.
class DatumError : public Error {
public:
    using Error::Error;
};

// A consistency check failed; indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace prym
