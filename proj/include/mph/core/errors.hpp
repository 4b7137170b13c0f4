#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mph {

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A mathematical precondition or invariant was violated (non-homogeneous matrix,
/// nonzero composite, inadmissible line, ...).
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mph
