#pragma once

#include <stdexcept>
#include <string>

namespace fourmove {

// Malformed input text (JSON documents, Gauss codes, word syntax).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates a semantic constraint
// (arc reference out of range, unknown catalog name, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation called outside its contract (q too small, degree too large,
// alphabet mismatch, missing homomorphism image).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computation exceeded a configured resource budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fourmove
