#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquemin {

// Malformed caller input: out-of-range vertex, self-loop, empty vertex set,
// a vertex set that is not a clique.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside the range where a quantity is defined (β outside (0,1),
// a clique order above p+1, a violated minimum-degree hypothesis, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text that could not be decoded. `offset` is the byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// n and (1-β)n both odd: the extremal family is not defined.
class FamilyUndefinedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// The requested construction is outside what this library can build.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search was refused because the instance exceeds the
// configured size threshold.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliquemin
