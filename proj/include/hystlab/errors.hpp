#pragma once

#include <stdexcept>
#include <string>

namespace hystlab {

// Invalid parameters or malformed configuration. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical breakdown during integration or quadrature. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double t)
      : std::runtime_error(what + " at t=" + std::to_string(t)), t_(t) {}
  explicit NumericalError(const std::string& what) : std::runtime_error(what), t_(0.0) {}

  double failing_time() const { return t_; }

 private:
  double t_;
};

}  // namespace hystlab
