#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiframe {

// Base class for every failure this library reports deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix argument was malformed (non-finite entries, not Hermitian, ...).
class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

// A claimed orthonormal basis failed the orthonormality check.
class InvalidBasis : public Error {
 public:
  using Error::Error;
};

// Dimension or count mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A family cannot be materialized at the requested truncation level.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

// A span-relative classification was asked for an identically zero family.
class EmptySpan : public Error {
 public:
  using Error::Error;
};

// A sum-hypothesis check needed a Bessel bound that diverges.
class NotBessel : public Error {
 public:
  using Error::Error;
};

// A trajectory needed a definite trend but the ladder was inconclusive.
class InconclusiveTrend : public Error {
 public:
  using Error::Error;
};

// run_check was handed an id outside the built-in catalogue.
class UnknownProposition : public Error {
 public:
  using Error::Error;
};

// Scenario text failed to parse or validate; carries the offending line.
class ScenarioError : public Error {
 public:
  ScenarioError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ScenarioError(const std::string& what) : Error(what), line_(0) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace semiframe
