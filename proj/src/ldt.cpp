#include "nnrep/ldt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

int tree_dimension_unchecked(const linear_decision_tree& tree) {
  for (const ldt_node& node : tree.nodes) {
    if (!node.leaf) {
      return static_cast<int>(node.weights.size());
    }
  }
  return 0;
}

}  // namespace

void validate_tree(const linear_decision_tree& tree) {
  if (tree.nodes.empty()) {
    throw invalid_argument("decision tree has no nodes");
  }
  const int size = static_cast<int>(tree.nodes.size());
  const int dim = tree_dimension_unchecked(tree);
  if (dim != 0 && (dim < 1 || dim > boolean_function::max_arity)) {
    throw invalid_argument("decision tree dimension must be between 1 and 24, got " +
                           std::to_string(dim));
  }
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const ldt_node& node = tree.nodes[static_cast<std::size_t>(v)];
    if (node.leaf) {
      if (*node.leaf != 0 && *node.leaf != 1) {
        throw invalid_argument("leaf value must be 0 or 1, got " + std::to_string(*node.leaf));
      }
      continue;
    }
    if (static_cast<int>(node.weights.size()) != dim) {
      throw invalid_argument("test nodes disagree on dimension");
    }
    for (const int child : {node.le, node.gt}) {
      if (child < 0 || child >= size) {
        throw invalid_argument("child index " + std::to_string(child) + " out of range");
      }
      if (seen[static_cast<std::size_t>(child)]) {
        throw invalid_argument("node " + std::to_string(child) +
                               " is reachable twice; the node list does not encode a tree");
      }
      seen[static_cast<std::size_t>(child)] = 1;
      stack.push_back(child);
    }
  }
}

int ldt_dimension(const linear_decision_tree& tree) {
  if (tree.nodes.empty()) {
    throw invalid_argument("decision tree has no nodes");
  }
  return tree_dimension_unchecked(tree);
}

bool ldt_eval(const linear_decision_tree& tree, const boolean_point& x) {
  const int dim = ldt_dimension(tree);
  if (dim != 0 && dim != x.dimension) {
    throw dimension_mismatch("point of dimension " + std::to_string(x.dimension) +
                             " for a tree of dimension " + std::to_string(dim));
  }
  int v = 0;
  while (true) {
    const ldt_node& node = tree.nodes[static_cast<std::size_t>(v)];
    if (node.leaf) {
      return *node.leaf != 0;
    }
    rational dot = 0;
    for (int i = 0; i < dim; ++i) {
      if (x.bit(i)) {
        dot += node.weights[static_cast<std::size_t>(i)];
      }
    }
    v = dot <= node.threshold ? node.le : node.gt;
  }
}

int ldt_depth(const linear_decision_tree& tree) {
  if (tree.nodes.empty()) {
    throw invalid_argument("decision tree has no nodes");
  }
  // Iterative depth over (node, tests-so-far).
  int depth = 0;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    const auto [v, d] = stack.back();
    stack.pop_back();
    const ldt_node& node = tree.nodes[static_cast<std::size_t>(v)];
    if (node.leaf) {
      depth = std::max(depth, d);
      continue;
    }
    stack.emplace_back(node.le, d + 1);
    stack.emplace_back(node.gt, d + 1);
  }
  return depth;
}

ldt_report ldt_check(const boolean_function& f, const linear_decision_tree& tree) {
  const int dim = ldt_dimension(tree);
  if (dim != 0 && dim != f.arity()) {
    throw dimension_mismatch("function arity " + std::to_string(f.arity()) +
                             " does not match tree dimension " + std::to_string(dim));
  }
  ldt_report report;
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    if (ldt_eval(tree, make_boolean_point(a, f.arity())) != f.value(a)) {
      report.equal = false;
      report.witness = a;
      return report;
    }
  }
  report.equal = true;
  return report;
}

linear_decision_tree bisector_tree(const nn_representation& rep) {
  if (rep.positives().size() != 1 || rep.negatives().size() != 1) {
    throw invalid_argument("bisector tree needs exactly one prototype per side, got " +
                           std::to_string(rep.positives().size()) + " positive and " +
                           std::to_string(rep.negatives().size()) + " negative");
  }
  const rational_point& p = rep.positives().front();
  const rational_point& q = rep.negatives().front();
  ldt_node test;
  test.weights.reserve(static_cast<std::size_t>(rep.dimension()));
  rational threshold = 0;
  for (int i = 0; i < rep.dimension(); ++i) {
    test.weights.push_back(rational(2) * (p[i] - q[i]));
    threshold += p[i] * p[i] - q[i] * q[i];
  }
  test.threshold = std::move(threshold);
  test.le = 1;
  test.gt = 2;
  linear_decision_tree tree;
  tree.nodes.push_back(std::move(test));
  ldt_node zero;
  zero.leaf = 0;
  ldt_node one;
  one.leaf = 1;
  tree.nodes.push_back(std::move(zero));
  tree.nodes.push_back(std::move(one));
  return tree;
}

counted_result knn_classify_counted(const nn_representation& rep, const boolean_point& a, int k) {
  if (rep.size() == 0) {
    throw empty_representation("classification requires at least one prototype");
  }
  if (a.dimension != rep.dimension()) {
    throw dimension_mismatch("point of dimension " + std::to_string(a.dimension) +
                             " for a representation of dimension " +
                             std::to_string(rep.dimension()));
  }
  const std::size_t m = rep.size();
  if (k < 1) {
    throw invalid_argument("k must be at least 1, got " + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) > m) {
    throw k_too_large("k = " + std::to_string(k) + " exceeds the prototype count " +
                      std::to_string(m));
  }

  counted_result out;
  if (static_cast<std::size_t>(k) == m) {
    // Global vote: no distance enters the decision.
    const std::size_t positives = rep.positives().size();
    out.result = 2 * positives >= m ? label::positive : label::negative;
    return out;
  }

  const distance_table table(rep);
  std::vector<bigint> dist;
  dist.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    dist.push_back(table.scaled_sqdist(j, a.bits));
  }

  if (k == 1) {
    // Per-side running minima, then one cross comparison.
    std::optional<std::size_t> best_pos;
    std::optional<std::size_t> best_neg;
    for (std::size_t j = 0; j < m; ++j) {
      std::optional<std::size_t>& best =
          table.label_of(j) == label::positive ? best_pos : best_neg;
      if (!best) {
        best = j;
        continue;
      }
      ++out.comparisons;
      if (dist[j] < dist[*best]) {
        best = j;
      }
    }
    if (!best_pos || !best_neg) {
      out.result = best_pos ? label::positive : label::negative;
      return out;
    }
    ++out.comparisons;
    if (dist[*best_pos] < dist[*best_neg]) {
      out.result = label::positive;
    } else if (dist[*best_neg] < dist[*best_pos]) {
      out.result = label::negative;
    }  // equality: tie, result stays empty
    return out;
  }

  // Single-elimination tournament with absent-padded leaves. A match against
  // an absent slot is free; a real match costs one comparison and sends the
  // smaller distance (lower index on equality) up.
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::size_t leaves = 1;
  while (leaves < m) {
    leaves <<= 1;
  }
  std::vector<std::size_t> tree(2 * leaves, absent);
  const auto match = [&](std::size_t x, std::size_t y) {
    if (x == absent) {
      return y;
    }
    if (y == absent) {
      return x;
    }
    ++out.comparisons;
    if (dist[x] < dist[y]) {
      return x;
    }
    if (dist[y] < dist[x]) {
      return y;
    }
    return std::min(x, y);
  };
  for (std::size_t j = 0; j < m; ++j) {
    tree[leaves + j] = j;
  }
  for (std::size_t v = leaves - 1; v >= 1; --v) {
    tree[v] = match(tree[2 * v], tree[2 * v + 1]);
  }
  std::vector<std::size_t> order;
  order.reserve(static_cast<std::size_t>(k) + 1);
  order.push_back(tree[1]);
  for (int round = 0; round < k; ++round) {
    std::size_t v = leaves + order.back();
    tree[v] = absent;
    for (v >>= 1; v >= 1; v >>= 1) {
      tree[v] = match(tree[2 * v], tree[2 * v + 1]);
    }
    order.push_back(tree[1]);
  }
  ++out.comparisons;  // the well-definedness check below
  if (dist[order[static_cast<std::size_t>(k) - 1]] == dist[order[static_cast<std::size_t>(k)]]) {
    return out;  // the k nearest prototypes are not a well-defined set
  }
  int positives = 0;
  for (int j = 0; j < k; ++j) {
    positives += table.label_of(order[static_cast<std::size_t>(j)]) == label::positive ? 1 : 0;
  }
  out.result = 2 * positives >= k ? label::positive : label::negative;
  return out;
}

std::uint64_t knn_comparison_bound(std::size_t m, int k) {
  if (m == 0 || k < 1 || static_cast<std::size_t>(k) > m) {
    throw invalid_argument("comparison bound needs 1 <= k <= size");
  }
  const std::uint64_t log_k1 = ceil_log2(bigint(k + 1));
  const std::uint64_t log_m = ceil_log2(bigint(m));
  return static_cast<std::uint64_t>(m) * (1 + log_k1) + static_cast<std::uint64_t>(k) * log_m;
}

rectangle_result max_mono_rectangle(int n) {
  if (n < 1 || n > 3) {
    throw arity_out_of_range("rectangle search supports 1 <= n <= 3, got " + std::to_string(n));
  }
  const std::uint32_t side = std::uint32_t{1} << n;
  const std::uint32_t full = (std::uint32_t{1} << side) - 1;
  // col_of_value[v][x]: columns y with popcount(x & y) parity v.
  std::vector<std::array<std::uint32_t, 2>> cols_by_row(side);
  for (std::uint32_t x = 0; x < side; ++x) {
    cols_by_row[x] = {0, 0};
    for (std::uint32_t y = 0; y < side; ++y) {
      const int v = std::popcount(x & y) & 1;
      cols_by_row[x][static_cast<std::size_t>(v)] |= std::uint32_t{1} << y;
    }
  }
  rectangle_result best;
  best.n = n;
  for (std::uint32_t rows = 1; rows <= full; ++rows) {
    for (int v = 0; v <= 1; ++v) {
      std::uint32_t cols = full;
      for (std::uint32_t x = 0; x < side && cols != 0; ++x) {
        if ((rows >> x) & 1u) {
          cols &= cols_by_row[x][static_cast<std::size_t>(v)];
        }
      }
      const std::uint64_t area =
          static_cast<std::uint64_t>(std::popcount(rows)) * std::popcount(cols);
      if (area > best.area) {
        best.area = area;
        best.rows = rows;
        best.cols = cols;
        best.value = v;
      }
    }
  }
  return best;
}

}  // namespace nnrep
