#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace delpezzo {

/// Malformed class or word text. `position` is the 0-based offset of the
/// offending character in the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Base for violated mathematical preconditions (CLI exit code 3).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotALine : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSkew : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidTriple : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidPermutation : public DomainError {
 public:
  using DomainError::DomainError;
};

class BoundTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace delpezzo
