#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/representation.hpp"

namespace nnrep {

struct search_limits {
  std::optional<std::size_t> max_size;
  std::optional<std::chrono::milliseconds> time_limit;
};

// Outcome of an exhaustive size-increasing search. When optimum is set, the
// witness verifies and every smaller candidate was enumerated and refuted,
// so the value is exactly minimal. exhausted_up_to is the largest size whose
// candidates were all refuted; explored counts every candidate checked.
struct search_result {
  std::optional<std::size_t> optimum;
  std::optional<nn_representation> witness;
  std::uint64_t explored = 0;
  std::size_t exhausted_up_to = 0;
};

// Smallest nearest-neighbor representation with Boolean prototypes. Labels
// are forced (a Boolean prototype must carry its own function value, or it
// misclassifies itself at distance zero), so candidates are plain subsets of
// {0,1}^n, enumerated by size and then lexicographically by point index.
// Arity <= 4 completes unconditionally; arity 5 requires limits.max_size.
search_result exact_bnn(const boolean_function& f, const search_limits& limits = {});

// Smallest k-nearest-neighbor representation with Boolean prototypes, sizes
// k..max_size. For k > 1 prototype labels are free (a majority vote can
// overrule a prototype's own value), so subsets are paired with every
// labeling, in ascending label-mask order. Arity <= 4.
search_result exact_knn_bnn(const boolean_function& f, int k, std::size_t max_size,
                            const search_limits& limits = {});

// Smallest verifying labeled subset of an explicit finite grid of candidate
// prototypes (an upper bound on the unrestricted optimum). Boolean grid
// points keep their forced labels; other grid points try both labels.
search_result grid_nn_upper(const boolean_function& f, const std::vector<rational_point>& grid,
                            std::size_t max_size, const search_limits& limits = {});

// Default grid: all of {0,1}^n plus the diagonal points (l/n, ..., l/n),
// l = 0..n, deduplicated.
std::vector<rational_point> default_grid(int n);

}  // namespace nnrep
