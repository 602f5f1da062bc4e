#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soscert {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class EmptyBasisError : public Error {
public:
    EmptyBasisError() : Error("basis is empty") {}
};

class EmptyPolynomialError : public Error {
public:
    EmptyPolynomialError() : Error("polynomial has no terms") {}
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

// Token-stream parse failure; `byte_offset` points at the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : Error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset(byte_offset) {}
    std::size_t byte_offset;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class MissingGroundTruth : public Error {
public:
    MissingGroundTruth() : Error("oracle predictor requires a ground-truth basis") {}
};

class ExternalPredictorError : public Error {
public:
    using Error::Error;
};

class InvalidRho : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class InvalidSample : public Error {
public:
    using Error::Error;
};

class PoolExhausted : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace soscert
