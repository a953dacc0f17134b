#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordquant {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {Q,P} and {A,Adag} generators met on the same mode.
class KindMismatchError : public Error {
 public:
  using Error::Error;
};

// Combinatorial guard tripped (e.g. brute-force symmetrization bound).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Invalid physical model or numeric argument.
class ModelError : public Error {
 public:
  using Error::Error;
};

// ||r(0)|| == 0, the departure ratio is undefined.
class DegenerateCenterError : public ModelError {
 public:
  using ModelError::ModelError;
};

// Root scan ran past its horizon without a crossing.
class HorizonError : public Error {
 public:
  HorizonError(const std::string& what, double bound) : Error(what), bound_(bound) {}
  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

// Monte Carlo observable returned NaN/inf.
class PropagationError : public Error {
 public:
  PropagationError(const std::string& what, std::size_t sample) : Error(what), sample_(sample) {}
  std::size_t sample() const noexcept { return sample_; }

 private:
  std::size_t sample_;
};

// Positioned syntax error from the expression front end.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
      : Error(format(message, offset, expected)),
        message_(std::move(message)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& message, std::size_t offset,
                            const std::vector<std::string>& expected) {
    std::string out = "at offset " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) out += " | ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::string message_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace ordquant
