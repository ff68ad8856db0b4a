#ifndef IDEALS_ERRORS_HPP
#define IDEALS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ideals {

/// Two values with incompatible ambient dimensions met in a binary operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int lhs, int rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

/// A precondition on the mathematical domain was violated (zero ideal where a
/// nonzero one is required, non-zero-dimensional input to a length
/// computation, and so on).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configurable work cap (S-pair count, generator explosion) was exceeded.
/// Recoverable: signals desk-scale overflow, not invalid input.
class WorkLimitExceeded : public std::runtime_error {
 public:
  explicit WorkLimitExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// Text input did not match the declared grammar. Carries the byte offset of
/// the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ideals

#endif
