#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace namescan {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Name normalization removed every character of the input.
class EmptyAfterNormalization : public Error {
 public:
  explicit EmptyAfterNormalization(const std::string& raw)
      : Error("name is empty after normalization: \"" + raw + "\"") {}
};

// Input table is missing a required column or has an unusable header.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Structurally malformed delimited input (bad quoting, ragged row, ...).
class CsvParseError : public Error {
 public:
  CsvParseError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

// Failure to read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

// Requested sample size exceeds the pool size.
class SampleLargerThanPool : public Error {
 public:
  using Error::Error;
};

// Observed distinct count outside [0, n].
class InvalidObservedCount : public Error {
 public:
  using Error::Error;
};

// Instance too large for the exact enumeration routine.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// Pool of names is empty.
class EmptyPool : public Error {
 public:
  using Error::Error;
};

// A routine that needs at least one element received none.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

// A p-value outside (0, 1] (or NaN) was supplied.
class InvalidPValue : public Error {
 public:
  using Error::Error;
};

// Two aligned collections disagree on labels or length.
class LabelMismatch : public Error {
 public:
  using Error::Error;
};

// Regression design without enough variation to fit.
class DegenerateDesign : public Error {
 public:
  using Error::Error;
};

// Configuration value outside its legal range.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Selected name field not populated for every person.
class InvalidFieldSelection : public Error {
 public:
  using Error::Error;
};

}  // namespace namescan
