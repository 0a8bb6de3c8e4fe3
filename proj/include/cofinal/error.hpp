#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cofinal {

// Every failure the library reports carries a stable kind tag; the CLI prints
// it as `error: <kind>: <detail>`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& detail)
      : Error("syntax", "at position " + std::to_string(position) + ": " + detail),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct DomainError : Error {
  using Error::Error;
};

struct CapExceeded : DomainError {
  explicit CapExceeded(const std::string& detail) : DomainError("cap-exceeded", detail) {}
};

struct NotALimit : DomainError {
  explicit NotALimit(const std::string& detail) : DomainError("not-a-limit", detail) {}
};

struct OutOfRange : DomainError {
  explicit OutOfRange(const std::string& detail) : DomainError("out-of-range", detail) {}
};

struct GuardExceeded : DomainError {
  explicit GuardExceeded(const std::string& detail) : DomainError("guard-exceeded", detail) {}
};

struct CertificateViolation : DomainError {
  explicit CertificateViolation(const std::string& detail)
      : DomainError("certificate-violation", detail) {}
};

// Raised when an iteration ceiling is hit; signals a construction bug rather
// than bad input.
struct IterationCeiling : DomainError {
  explicit IterationCeiling(const std::string& detail)
      : DomainError("iteration-ceiling", detail) {}
};

}  // namespace cofinal
