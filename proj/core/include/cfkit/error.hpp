#pragma once

#include <stdexcept>
#include <string>

namespace cfkit {

// Base class for all library errors. Callers that only need a broad
// success/failure split can catch this; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class IncompatibleFields : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class IndexBeyondDepth : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class NotGridPoint : public Error {
public:
    using Error::Error;
};

class EqualEndpoints : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class ZeroWord : public Error {
public:
    using Error::Error;
};

class NoSuccessor : public Error {
public:
    using Error::Error;
};

class NotConvertible : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class IncomparableStreams : public Error {
public:
    using Error::Error;
};

class UnsupportedTail : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace cfkit
