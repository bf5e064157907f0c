#pragma once

#include <stdexcept>
#include <string>

namespace metric {

// Bad input: malformed files, contract violations by the caller. CLI exit 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based line number. CLI exit 1.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DomainError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Instance too large for a brute-force component. CLI exit 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A guaranteed internal invariant failed to hold. CLI exit 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace metric
