#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nnrep/rational.hpp"

namespace nnrep {

// Coordinates are 1-based in text renderings ("x1x2...xn", x1 leftmost) and
// 0-based in code. A point of the n-cube packs coordinate i into bit i of
// `bits`, so the assignment index of (x1,...,xn) is sum(xi * 2^(i-1)).
struct boolean_point {
  std::uint32_t bits = 0;
  int dimension = 0;

  bool bit(int i) const { return (bits >> i) & 1u; }
  int weight() const;
};

// Validated constructor: 1 <= dimension <= 24 and bits < 2^dimension.
boolean_point make_boolean_point(std::uint32_t bits, int dimension);

// Parses "1,0,1" (comma-separated bits, dimension = number of entries).
boolean_point parse_boolean_point(std::string_view text);

// Renders as "x1x2...xn", e.g. bits 3 with dimension 4 -> "1100".
std::string bits_string(std::uint32_t bits, int dimension);

// Number of coordinates where the points differ.
int hamming(const boolean_point& a, const boolean_point& b);

// Point of R^n with exact rational coordinates.
class rational_point {
 public:
  rational_point() = default;
  explicit rational_point(std::vector<rational> coords) : coords_(std::move(coords)) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  const rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<rational>& coords() const { return coords_; }

  // True when every coordinate is 0 or 1.
  bool is_boolean() const;
  // Packs a Boolean-valued point into bits; requires is_boolean().
  std::uint32_t boolean_bits() const;

  friend bool operator==(const rational_point& a, const rational_point& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const rational_point& a, const rational_point& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<rational> coords_;
};

rational_point to_rational_point(const boolean_point& p);

// Exact squared Euclidean distance; throws dimension_mismatch on unequal
// dimensions. On Boolean points this equals the Hamming distance.
rational sqdist(const rational_point& a, const rational_point& b);

}  // namespace nnrep
