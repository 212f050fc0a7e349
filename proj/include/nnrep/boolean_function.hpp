#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnrep/rational.hpp"

namespace nnrep {

// Truth table of an n-ary Boolean function, n <= 24. The table index of an
// assignment (x1,...,xn) is sum(xi * 2^(i-1)): x1 is the least significant
// bit. Index i of the table therefore holds f at the point with bits i.
class boolean_function {
 public:
  static constexpr int max_arity = 24;

  explicit boolean_function(int arity);

  int arity() const { return arity_; }
  std::uint32_t domain_size() const { return std::uint32_t{1} << arity_; }

  bool value(std::uint32_t assignment) const {
    return (words_[assignment >> 6] >> (assignment & 63u)) & 1u;
  }
  void set_value(std::uint32_t assignment, bool v);

  std::uint64_t count_ones() const;

  // Lowercase hex of the table integer sum(f(i) * 2^i), fixed width
  // ceil(2^n / 4) digits.
  std::string table_hex() const;

  friend bool operator==(const boolean_function& a, const boolean_function& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  int arity_;
  std::vector<std::uint64_t> words_;
};

// Weighted threshold function: f(x) = 1 iff sum(w_i * x_i) >= t, with integer
// weights and threshold. Rational inputs are pre-scaled through from_rationals.
struct threshold_spec {
  std::vector<bigint> weights;
  bigint threshold;

  int arity() const { return static_cast<int>(weights.size()); }

  // Clears denominators by the least common multiple, preserving semantics.
  static threshold_spec from_rationals(const std::vector<rational>& weights,
                                       const rational& threshold);
};

// Symmetric function given by the set of Hamming weights mapped to 1:
// f(x) = 1 iff popcount(x) is listed in levels.
struct symmetric_spec {
  int arity = 0;
  std::vector<int> levels;  // sorted, unique, each in [0, arity]

  // Validates and normalizes (sorts, deduplicates) the level list.
  static symmetric_spec make(int arity, std::vector<int> levels);
};

boolean_function make_parity(int n);
boolean_function make_majority(int n);  // 1 iff popcount(x) >= n/2
boolean_function make_threshold(const threshold_spec& spec);
boolean_function make_symmetric(const symmetric_spec& spec);
// 2n-ary function on (x1..xn, y1..yn): xor over i of (x_i and y_i).
boolean_function make_inner_product(int n);
boolean_function function_from_hex(int arity, std::string_view hex);

// Parsed form of the function mini-language:
//   parity:n | maj:n | th:n:t[:w1,...,wn] | ip:n | sym:n[:l1,l2,...] |
//   table:n:<hex>
// with rational literals "p" or "p/q" allowed for thresholds and weights.
struct function_spec {
  enum class family { parity, majority, threshold, inner_product, symmetric, table };

  family kind = family::table;
  int arity = 0;     // total variable count (2n for ip:n)
  int ip_half = 0;   // the n of ip:n
  std::optional<threshold_spec> threshold;
  std::optional<symmetric_spec> symmetric;
  std::string table_hex;
  std::string text;  // original spec text
};

function_spec parse_function_spec(std::string_view text);
boolean_function realize(const function_spec& spec);
boolean_function parse_function(std::string_view text);

// Canonical spec text "table:n:<hex>" for an arbitrary function.
std::string table_spec_text(const boolean_function& f);

}  // namespace nnrep
