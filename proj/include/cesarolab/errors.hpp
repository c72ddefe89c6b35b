#pragma once

#include <stdexcept>
#include <string>

namespace cesarolab {

// Base for all numerical-domain failures raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument sits on a pole of Gamma (z = 0, -1, -2, ...).
class PoleError : public Error {
  public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid parameter (e.g. c a non-positive integer in 2F1).
class ParameterError : public Error {
  public:
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// Evaluation point outside the domain of the function or grid.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Series or adaptive quadrature failed to meet tolerance within its budget.
class ConvergenceError : public Error {
  public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Tail of a truncated semi-infinite integral cannot be bounded below tolerance.
class TailError : public Error {
  public:
    explicit TailError(const std::string& msg) : Error(msg) {}
};

// Operation has no rule for this function tag (e.g. Weyl of a pure power).
class UnsupportedFunctionError : public Error {
  public:
    explicit UnsupportedFunctionError(const std::string& msg) : Error(msg) {}
};

}  // namespace cesarolab
