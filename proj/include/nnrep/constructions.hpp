#pragma once

#include <cstdint>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/representation.hpp"

namespace nnrep {

// Partition of {0,1}^n into cells, each contained in the radius-1 Hamming
// ball of its center, with every center belonging to its own cell.
struct ball_covering {
  int dimension = 0;
  std::vector<std::uint32_t> centers;            // in selection order
  std::vector<std::vector<std::uint32_t>> cells;  // cells[i] sorted ascending
  std::vector<int> cell_index;                    // point -> owning cell

  std::size_t cell_count() const { return centers.size(); }
};

// Symmetric function: n+1 prototypes p_l = (l/n, ..., l/n), l = 0..n, with
// p_l positive iff level l maps to 1. Size is always n+1.
nn_representation build_symmetric(const symmetric_spec& spec);

// Threshold function: two prototypes c +/- w on the weight line, where
// c = ((t - 1/2) / sum(w_i^2)) * w, so that for every Boolean x
//   sqdist(x, c - w) - sqdist(x, c + w) = 4 (w.x - (t - 1/2)),
// which is positive exactly when f(x) = 1 and never zero. All-zero weights
// yield a constant function represented by the single prototype 0^n.
nn_representation build_threshold(const threshold_spec& spec);

// Majority with Boolean prototypes. Odd n: {1^n} vs {0^n}, size 2. Even n:
// negatives {0^n}, positives the n/2 + 1 weight-(n-1) points whose zero
// coordinate is one of the first n/2 + 1 coordinates; size n/2 + 2.
nn_representation build_majority_bnn(int n);

// Parity with Boolean prototypes: every point of {0,1}^n, labeled by f.
// Requires n <= 16.
nn_representation build_parity_bnn(int n);

// Radius-1 covering of the cube, 1 <= n <= 12. For n = 2^r - 1 the cells are
// the Hamming balls around the perfect Hamming code; otherwise centers are
// chosen greedily (most uncovered points first, lowest index on ties) and
// each non-center point joins the lowest-index center within distance 1.
ball_covering cover_hypercube(int n);

// Exact coordinate-wise mean of a nonempty list of cube points.
rational_point centroid(const std::vector<std::uint32_t>& points, int dimension);

// Covering-based representation of an arbitrary function, arity <= 12.
// Per cell: the non-center points of each value class contribute their
// centroid when the class has >= 3 points and the points themselves
// otherwise; the center contributes itself with label f(center). Duplicate
// prototypes across cells are merged; a duplicate carrying both labels is a
// construction error. The result is re-verified before it is returned.
nn_representation build_covering(const boolean_function& f);
nn_representation build_covering(const boolean_function& f, const ball_covering& covering);

}  // namespace nnrep
