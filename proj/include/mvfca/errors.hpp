#pragma once

#include <stdexcept>
#include <string>

namespace mvfca {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid material, valley or run configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// A closed-form limit was requested outside its validity range.
class RegimeError : public Error {
public:
  RegimeError(const std::string &what, double omega)
      : Error(what), omega_(omega) {}
  double omega() const noexcept { return omega_; }

private:
  double omega_;
};

class NumericError : public Error {
public:
  using Error::Error;
};

/// Argument outside the representable range of a special function.
class DomainError : public NumericError {
public:
  using NumericError::NumericError;
};

class QuadratureError : public NumericError {
public:
  QuadratureError(const std::string &what, double estimate, double error)
      : NumericError(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_; }

private:
  double estimate_;
  double error_;
};

} // namespace mvfca
