#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace splitnull {

/// Operand shapes do not fit together (non-square determinant, length mismatch, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 / edge-list input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An analysis was asked for outside the domain where it is defined,
/// e.g. the clique-kernel of a split graph with fewer than two clique vertices.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A structural identity that must hold for every input failed.
/// Carries the stable catalog id of the statement that broke.
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(std::string theorem, const std::string& what)
      : std::logic_error(theorem + ": " + what), theorem_(std::move(theorem)) {}

  const std::string& theorem() const noexcept { return theorem_; }

 private:
  std::string theorem_;
};

}  // namespace splitnull
