#pragma once

#include <stdexcept>
#include <string>

namespace schwinger {

// Base class for every error raised by the library. The CLI maps these to
// exit status 2 (validation error).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NoInverse : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NotSignRoot : public Error {
public:
    using Error::Error;
};

class NotCentral : public Error {
public:
    using Error::Error;
};

}  // namespace schwinger
