#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnacrypt {

// Base for every error raised by the library. The CLI maps subclasses to
// distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition: length/dimension mismatch, out-of-range index.
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at index " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Numeric result is undefined (zero variance, PSNR of identical inputs, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InconsistentSystem : public Error {
 public:
  InconsistentSystem(const std::string& what, std::size_t equation)
      : Error(what), equation_(equation) {}
  std::size_t equation() const noexcept { return equation_; }

 private:
  std::size_t equation_;
};

// Recovered key does not reproduce the observed ciphertext.
class AttackFailed : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace dnacrypt
