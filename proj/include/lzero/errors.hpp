#pragma once

#include <stdexcept>
#include <string>

namespace lzero {

/// Input violates an operation's precondition (bad label, bad window, ...).
class RejectedInput : public std::invalid_argument {
 public:
  explicit RejectedInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical self-check tripped: the result cannot be trusted.
class AccuracyFailure : public std::runtime_error {
 public:
  explicit AccuracyFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at a pole (s = 1 for zeta or a principal L-function).
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lzero
