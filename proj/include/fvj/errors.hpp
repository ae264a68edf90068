#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fvj {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in the tangle text format. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A smoothed state whose closure is not a curve system the surface can carry.
/// Genuine planar tangles never produce one; it signals inconsistent input.
class EmbeddingViolation : public Error {
public:
  explicit EmbeddingViolation(const std::string& what) : Error(what) {}
  EmbeddingViolation(const std::string& what, std::string state)
      : Error(what + " (state " + (state.empty() ? std::string("-") : state) + ")"), state_(std::move(state)) {}

  const std::optional<std::string>& state() const noexcept { return state_; }

private:
  std::optional<std::string> state_;
};

/// Refusal to enumerate more states than the configured cap allows.
class ResourceError : public Error {
public:
  using Error::Error;
};

}  // namespace fvj
