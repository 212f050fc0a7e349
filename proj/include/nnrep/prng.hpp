#pragma once

#include <cstdint>

#include "nnrep/boolean_function.hpp"

namespace nnrep {

// Counter-based generator: the i-th output is a pure function of (seed, i),
// so a stream can be replayed or split without carrying hidden state. The
// word function is the 64-bit split-mix finalizer over base + i * golden.
class counter_rng {
 public:
  explicit counter_rng(std::uint64_t seed, std::uint64_t index = 0)
      : base_(finalize(seed ^ 0x6A09E667F3BCC909ull)), index_(index) {}

  std::uint64_t next() { return finalize(base_ + 0x9E3779B97F4A7C15ull * ++index_); }

  // Uniform-enough value in [0, bound) via the high half of a 128-bit
  // product; bound must be positive. Deterministic in (seed, draw index).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  std::uint64_t index() const { return index_; }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t base_;
  std::uint64_t index_;
};

// Uniformly random truth table over n variables, one word of entropy per 64
// table entries.
inline boolean_function random_function(int n, counter_rng& rng) {
  boolean_function f(n);
  const std::uint32_t domain = f.domain_size();
  std::uint64_t word = 0;
  for (std::uint32_t a = 0; a < domain; ++a) {
    if ((a & 63u) == 0) {
      word = rng.next();
    }
    f.set_value(a, (word >> (a & 63u)) & 1u);
  }
  return f;
}

}  // namespace nnrep
