#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/points.hpp"
#include "nnrep/rational.hpp"
#include "nnrep/representation.hpp"

namespace nnrep {

// One node of a linear decision tree: either a 0/1 leaf or a test
// "weights . x <= threshold", branching to node `le` when the inequality
// holds and to node `gt` otherwise.
struct ldt_node {
  std::optional<int> leaf;
  std::vector<rational> weights;
  rational threshold;
  int le = -1;
  int gt = -1;
};

// Rooted at nodes[0]. A single-leaf tree is a constant function compatible
// with any arity; otherwise every test has the same positive dimension.
struct linear_decision_tree {
  std::vector<ldt_node> nodes;
};

// Structural checks: nonempty, child indices in range, no node reachable
// twice from the root (the node list encodes a tree), leaves are 0/1, and all
// tests agree on a dimension between 1 and 24. Throws invalid_argument.
void validate_tree(const linear_decision_tree& tree);

// Common dimension of the tests; 0 for a leaf-only tree.
int ldt_dimension(const linear_decision_tree& tree);

// Evaluates the tree at a Boolean point with exact rational tests.
bool ldt_eval(const linear_decision_tree& tree, const boolean_point& x);

// Number of tests on the longest root-to-leaf path; 0 for a single leaf.
int ldt_depth(const linear_decision_tree& tree);

struct ldt_report {
  bool equal = false;
  std::optional<std::uint32_t> witness;  // first disagreeing input, ascending
};

// Compares the tree against a truth table on all 2^n inputs.
ldt_report ldt_check(const boolean_function& f, const linear_decision_tree& tree);

// Depth-1 tree for a representation with exactly one prototype per side:
// the test is the perpendicular bisector 2(p - q) . x <= |p|^2 - |q|^2, with
// the le branch (including points equidistant from both prototypes) mapped
// to 0 and the gt branch to 1.
linear_decision_tree bisector_tree(const nn_representation& rep);

struct counted_result {
  std::optional<label> result;
  std::uint64_t comparisons = 0;
};

// k-nearest classification that counts exact distance comparisons. One
// three-way comparison of two scaled squared distances counts once; resolving
// an observed equality toward the lower index is part of that comparison.
// k = size runs a voteless-of-distances majority (0 comparisons); k = 1 keeps
// per-side running minima and compares the two; otherwise a single-elimination
// tournament extracts the k+1 nearest prototypes and checks that the k-th and
// (k+1)-th distances differ. The total never exceeds knn_comparison_bound.
counted_result knn_classify_counted(const nn_representation& rep, const boolean_point& a, int k);

// m(1 + ceil(log2(k+1))) + k ceil(log2 m) for size m, 1 <= k <= m.
std::uint64_t knn_comparison_bound(std::size_t m, int k);

// Largest monochromatic combinatorial rectangle of the 2^n x 2^n matrix
// M[x][y] = parity of popcount(x & y). Rows and columns are bitmasks over
// assignment indices; `value` is the constant color.
struct rectangle_result {
  int n = 0;
  std::uint64_t area = 0;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  int value = 0;
};

// Exhaustive over row subsets (n <= 3): for each nonempty row set, the best
// companion column set is forced, so the scan is exact. Deterministic: the
// first strictly larger rectangle in (row mask ascending, color 0 then 1)
// order wins.
rectangle_result max_mono_rectangle(int n);

}  // namespace nnrep
