#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlap {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems.
class ParseError : public Error {
 public:
  using Error::Error;
};
class LoopError : public Error {
 public:
  using Error::Error;
};
class AsymmetryError : public Error {
 public:
  using Error::Error;
};
class RangeError : public Error {
 public:
  using Error::Error;
};
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Structural preconditions on the graph.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};
class IsolatedVertexError : public Error {
 public:
  using Error::Error;
};
class NotRegularError : public Error {
 public:
  using Error::Error;
};
class NotVertexTransitive : public Error {
 public:
  using Error::Error;
};
class ConstantVectorError : public Error {
 public:
  using Error::Error;
};
class MissingRelationLength : public Error {
 public:
  using Error::Error;
};

// Computational limits.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double off_diagonal)
      : Error(what), off_diagonal_(off_diagonal) {}
  double off_diagonal() const noexcept { return off_diagonal_; }

 private:
  double off_diagonal_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class CapacityExceeded : public Error {
 public:
  CapacityExceeded(const std::string& what, std::size_t found)
      : Error(what), found_(found) {}
  // Number of items enumerated when the cap tripped.
  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t found_;
};

}  // namespace qlap
