#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skirent {

// Day index or day count outside the valid window.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Parameter outside its mathematical domain (lambda = 0, T < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A price sequence violates one of its structural invariants.
class InvariantError : public std::invalid_argument {
 public:
  enum class Which { Range, Truncation, Budget, Completeness };

  InvariantError(Which which, const std::string& what)
      : std::invalid_argument(what), which_(which) {}

  Which which() const noexcept { return which_; }

 private:
  Which which_;
};

// The prefix is too short for tail quantities to be determined.
class CompletenessError : public InvariantError {
 public:
  CompletenessError(std::int64_t required_length, const std::string& what)
      : InvariantError(Which::Completeness, what), required_length_(required_length) {}

  std::int64_t required_length() const noexcept { return required_length_; }

 private:
  std::int64_t required_length_;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive search would exceed the configured cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A game strategy produced an illegal pledge.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skirent
