#pragma once

#include <stdexcept>

namespace nnrep {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (function spec, rational literal, JSON document).
struct parse_error : error {
  using error::error;
};

// Operands of incompatible dimensions (points, representations, functions).
struct dimension_mismatch : error {
  using error::error;
};

// Arity outside the supported range of an operation.
struct arity_out_of_range : error {
  using error::error;
};

// Classification requested against a representation with no prototypes.
struct empty_representation : error {
  using error::error;
};

// k exceeds the number of prototypes.
struct k_too_large : error {
  using error::error;
};

// Prototype sets violate the representation invariants (duplicates/overlap).
struct invalid_representation : error {
  using error::error;
};

// A constructor produced a representation that fails its own re-check,
// or an internal consistency rule of the recipe was violated.
struct construction_error : error {
  using error::error;
};

// Polynomial compilation invariant failed (non-integral or oversized exponent,
// or the input representation does not compute the target function).
struct compile_error : error {
  using error::error;
};

// Invalid argument value (bad k, empty point list, and similar).
struct invalid_argument : error {
  using error::error;
};

}  // namespace nnrep
