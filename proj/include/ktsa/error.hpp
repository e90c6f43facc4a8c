#pragma once

#include <stdexcept>
#include <string>

namespace ktsa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible dimensionality (channel counts differ).
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A textual input could not be parsed; the message carries the line or
/// record number.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A textual input is structurally malformed (e.g. missing header).
class FormatError : public Error {
public:
  using Error::Error;
};

/// An argument violates its contract (non-finite sample, bad shape
/// parameter, invalid configuration value).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// An operation that requires a non-empty collection received an empty one.
class EmptySetError : public Error {
public:
  using Error::Error;
};

/// A corridor constraint makes the requested alignment infeasible, or a
/// leave-one-out split cannot be formed.
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// A kernel quantity underflowed to exactly zero where a positive value is
/// required. The log-domain entry points avoid this.
class UnderflowError : public Error {
public:
  using Error::Error;
};

/// A kernel quantity exceeds the range of double. The log-domain entry
/// points avoid this.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A row or column of a nonnegative matrix sums to zero where a probability
/// distribution was expected.
class DegenerateError : public Error {
public:
  using Error::Error;
};

/// A pairwise-average output index received no mass from either accumulator.
class CoverageError : public Error {
public:
  using Error::Error;
};

/// The evaluation budget cannot cover a single optimizer sweep.
class BudgetError : public Error {
public:
  using Error::Error;
};

/// An error-rate matrix handed to the ranking routine has missing cells.
class IncompleteMatrixError : public Error {
public:
  using Error::Error;
};

}  // namespace ktsa
