#pragma once

#include <stdexcept>
#include <string>

namespace adeds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algorithm or experiment parameters that cannot be run (population too small, rates out of range, ...).
class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// Box constraints with low >= high, non-finite limits, or zero dimension.
class InvalidBounds : public InvalidConfiguration {
 public:
  using InvalidConfiguration::InvalidConfiguration;
};

/// Arguments that violate an operation's precondition (dimension mismatch, empty sample, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  explicit UnknownFunction(const std::string& name)
      : Error("unknown function: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace adeds
