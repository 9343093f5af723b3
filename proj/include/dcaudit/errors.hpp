#pragma once

#include <stdexcept>
#include <string>

namespace dcaudit {

/// Base class for every error this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (bad JSON, bad CSV row, bad timestamp...).
/// The message carries line/field context where available.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed input that violates a domain invariant
/// (duplicate id, dangling reference, out-of-range value).
class ValidationError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Energy bookkeeping produced a negative quantity (e.g. reuse > total).
class NegativeResult : public Error {
public:
    using Error::Error;
};

class InvalidWindow : public Error {
public:
    using Error::Error;
};

class MismatchedReports : public Error {
public:
    using Error::Error;
};

class InfeasibleProfile : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace dcaudit
