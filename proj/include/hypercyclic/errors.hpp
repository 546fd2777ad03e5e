#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercyclic {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural problems with a hypergraph under construction.
class ValidationError : public Error {
 public:
  enum class Kind { kBadUniformity, kBadVertexCount, kWrongEdgeSize, kRepeatedVertex, kVertexOutOfRange, kDuplicateEdge };

  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ModulusError : public Error {
 public:
  using Error::Error;
};

/// Operation needs a connected hypergraph.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range numeric parameter (divisor, blow-up size, family sizes...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Power iteration ran out of iterations; carries the last Collatz-Wielandt bracket.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lower, double upper, int iterations)
      : Error(what), lower_(lower), upper_(upper), iterations_(iterations) {}
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double lower_;
  double upper_;
  int iterations_;
};

/// A relation guaranteed by theory failed to hold. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Line 0 means the failure is not tied to a line (e.g. unreadable file).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hypercyclic
