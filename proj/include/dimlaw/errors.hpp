#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dimlaw {

/// Base class for everything this library throws on bad input or
/// unsatisfiable requests. Logic errors (out-of-range indices on our own
/// containers) stay std::out_of_range / assert territory.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- parsing ---------------------------------------------------------------

struct ParseError : Error {
    using Error::Error;
};

struct UnknownDimension : ParseError {
    UnknownDimension(std::string message, std::string dimension_name)
        : ParseError(std::move(message)), name(std::move(dimension_name)) {}
    std::string name;
};

struct MalformedExpression : ParseError {
    MalformedExpression(std::string message, std::size_t pos)
        : ParseError(std::move(message)), position(pos) {}
    std::size_t position;
};

struct ZeroDenominatorExponent : ParseError {
    ZeroDenominatorExponent(std::string message, std::size_t pos)
        : ParseError(std::move(message)), position(pos) {}
    std::size_t position;
};

struct DuplicateQuantity : ParseError {
    DuplicateQuantity(std::string message, std::string quantity_name)
        : ParseError(std::move(message)), name(std::move(quantity_name)) {}
    std::string name;
};

struct MissingTarget : ParseError {
    using ParseError::ParseError;
};

struct MultipleTargets : ParseError {
    using ParseError::ParseError;
};

/// Anything else wrong with a problem file: bad keyword, missing dimensions
/// line, empty explanatory list, malformed CSV cell, ...
struct FormatError : ParseError {
    FormatError(std::string message, std::size_t line_number)
        : ParseError(std::move(message)), line(line_number) {}
    std::size_t line;
};

// --- exact linear algebra ---------------------------------------------------

struct LengthMismatch : Error {
    using Error::Error;
};

struct ZeroVector : Error {
    using Error::Error;
};

/// The inhomogeneous system has no solution. `row_combination` holds one
/// certificate: coefficients c (one per matrix row) with c^T A = 0 but
/// c^T a = `mismatch` != 0.
struct Inconsistent : Error {
    Inconsistent(std::string message, std::vector<std::string> combination,
                 std::string mismatch_value)
        : Error(std::move(message)),
          row_combination(std::move(combination)),
          mismatch(std::move(mismatch_value)) {}
    std::vector<std::string> row_combination;
    std::string mismatch;
};

// --- pi engine ----------------------------------------------------------------

/// The target dimension vector lies outside the column space of the
/// dimension matrix: no unit-invariant relation exists.
struct DimensionallyUnattainable : Error {
    DimensionallyUnattainable(std::string message,
                              std::vector<std::string> combination,
                              std::string mismatch_value)
        : Error(std::move(message)),
          row_combination(std::move(combination)),
          mismatch(std::move(mismatch_value)) {}
    std::vector<std::string> row_combination;
    std::string mismatch;
};

struct NotOneDegreeOfFreedom : Error {
    using Error::Error;
};

// --- verification -------------------------------------------------------------

struct BadDegreesOfFreedom : Error {
    using Error::Error;
};

struct DegenerateDesign : Error {
    using Error::Error;
};

struct NonPositiveValue : Error {
    NonPositiveValue(std::string message, std::size_t row_index, std::size_t column_index)
        : Error(std::move(message)), row(row_index), column(column_index) {}
    std::size_t row;
    std::size_t column;
};

struct NonPositiveScale : Error {
    using Error::Error;
};

}  // namespace dimlaw
