#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcover {

// Precondition violated (bad coordinate, out-of-range index, d < 2, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bounded computation hit its effort guard.
class EffortExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input; line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Cover data that does not define an abelian cover.
class InvalidCoverData : public std::runtime_error {
 public:
  enum class Kind { ZeroLabel, LabelOutOfRange, NonPositiveDegree, Divisibility };

  InvalidCoverData(Kind kind, std::size_t index, std::int64_t residue, const std::string& what)
      : std::runtime_error(what), kind_(kind), index_(index), residue_(residue) {}

  Kind kind() const noexcept { return kind_; }
  // Component index for label/degree failures, coordinate index i for Divisibility.
  std::size_t index() const noexcept { return index_; }
  // For Divisibility: (sum_alpha alpha_i x_alpha) mod n_i.
  std::int64_t residue() const noexcept { return residue_; }

 private:
  Kind kind_;
  std::size_t index_;
  std::int64_t residue_;
};

}  // namespace abcover
