#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlog {

// Input text could not be parsed. `position` is a 1-based token index for
// word syntax and a 1-based character column for expression syntax.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An argument lies outside the domain of an operation (non-convergent word,
// inadmissible index, bad relation parameters).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical evaluation was refused up front: z too close to the cut, weight
// over the configured maximum.
class EvaluationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlog
