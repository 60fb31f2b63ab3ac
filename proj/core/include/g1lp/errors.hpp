#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace g1lp {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or configuration (bad multiplicity, empty polynomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation point too close to a real zero of the product.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A quantity that must be real (up to round-off) came out complex.
class RealnessError : public Error {
 public:
  using Error::Error;
};

// Linear algebra backend failure (eigensolver did not converge, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Sign or value could not be certified at the maximum configured precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Height table not strictly increasing; indices are 1-based positions of the
// offending entries.
class MonotonicityError : public Error {
 public:
  MonotonicityError(const std::string& what, std::vector<std::size_t> indices)
      : Error(what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace g1lp
