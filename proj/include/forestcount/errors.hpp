#pragma once

#include <stdexcept>
#include <string>

namespace forestcount {

/// Matrix shapes do not conform (non-square where square is required,
/// mismatched products, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An index (pattern entry, vertex id) lies outside its container.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Caller-supplied arguments violate a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list text or generator spec.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is mathematically undefined for this input
/// (e.g. spanning trees of a disconnected graph).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact result that must be integral was not. Indicates a bug or a
/// violated precondition upstream, never bad user data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force routine was asked to exceed its size cap.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace forestcount
