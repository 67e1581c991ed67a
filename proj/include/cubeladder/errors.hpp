#pragma once

#include <stdexcept>
#include <string>

namespace cubeladder {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The radicand m is a perfect cube or smaller than 2.
class CubeError : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

/// Two operands live in Q(cbrt m) for different m.
class MixedField : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A ladder certificate could not be established. Never expected on
/// connections produced by find_connections; indicates a bug.
class CertificateFailure : public Error {
public:
    using Error::Error;
};

class NotConsecutive : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyHistogram : public Error {
public:
    using Error::Error;
};

}  // namespace cubeladder
