#pragma once

#include <stdexcept>
#include <string>

namespace netrel {

/// Base class; exit_code() maps onto the CLI contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

class InputError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
};

class VerificationError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

}  // namespace netrel
