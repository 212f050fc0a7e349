#include "nnrep/minimize.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

struct deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  explicit deadline(const search_limits& limits) {
    if (limits.time_limit) {
      at = std::chrono::steady_clock::now() + *limits.time_limit;
    }
  }
  bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
};

// Advances a size-|c| index combination over [0, universe) in lexicographic
// order; returns false after the last one.
bool next_combination(std::vector<int>& c, int universe) {
  const int s = static_cast<int>(c.size());
  for (int i = s - 1; i >= 0; --i) {
    if (c[i] < universe - (s - i)) {
      ++c[i];
      for (int j = i + 1; j < s; ++j) {
        c[j] = c[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

std::vector<char> truth_table(const boolean_function& f) {
  std::vector<char> truth(f.domain_size());
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    truth[a] = f.value(a) ? 1 : 0;
  }
  return truth;
}

bool bnn_candidate_ok(const std::vector<int>& ids, const std::vector<char>& truth,
                      std::uint32_t domain) {
  for (std::uint32_t x = 0; x < domain; ++x) {
    int best_pos = 1 << 30;
    int best_neg = 1 << 30;
    for (const int id : ids) {
      const int d = std::popcount(x ^ static_cast<std::uint32_t>(id));
      int& best = truth[static_cast<std::size_t>(id)] ? best_pos : best_neg;
      best = std::min(best, d);
    }
    const bool ok = truth[x] ? best_pos < best_neg : best_neg < best_pos;
    if (!ok) {
      return false;
    }
  }
  return true;
}

// k-NN candidate check with labels given by mask bit j for subset member j.
bool knn_candidate_ok(const std::vector<int>& ids, std::uint32_t mask, int k,
                      const std::vector<char>& truth, std::uint32_t domain) {
  const int s = static_cast<int>(ids.size());
  std::uint32_t key[32];
  for (std::uint32_t x = 0; x < domain; ++x) {
    for (int j = 0; j < s; ++j) {
      key[j] = (static_cast<std::uint32_t>(std::popcount(x ^ static_cast<std::uint32_t>(ids[j])))
                << 5) |
               static_cast<std::uint32_t>(j);
    }
    std::sort(key, key + s);
    if (k < s && (key[k - 1] >> 5) == (key[k] >> 5)) {
      return false;  // the k nearest prototypes are not a well-defined set
    }
    int positives = 0;
    for (int j = 0; j < k; ++j) {
      positives += (mask >> (key[j] & 31u)) & 1u;
    }
    if ((2 * positives >= k) != (truth[x] != 0)) {
      return false;
    }
  }
  return true;
}

nn_representation boolean_witness(const std::vector<int>& ids, const std::vector<char>& labels,
                                  int n) {
  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  for (std::size_t j = 0; j < ids.size(); ++j) {
    rational_point p =
        to_rational_point(make_boolean_point(static_cast<std::uint32_t>(ids[j]), n));
    if (labels[j]) {
      positives.push_back(std::move(p));
    } else {
      negatives.push_back(std::move(p));
    }
  }
  return nn_representation(n, std::move(positives), std::move(negatives));
}

}  // namespace

search_result exact_bnn(const boolean_function& f, const search_limits& limits) {
  const int n = f.arity();
  if (n > 5) {
    throw arity_out_of_range("exhaustive Boolean-prototype search supports arity <= 5, got " +
                             std::to_string(n));
  }
  if (n == 5 && !limits.max_size) {
    throw arity_out_of_range("arity 5 requires an explicit size cutoff");
  }
  const std::uint32_t domain = f.domain_size();
  const std::vector<char> truth = truth_table(f);
  const std::size_t max_s =
      std::min<std::size_t>(limits.max_size.value_or(domain), domain);
  const deadline stop(limits);

  search_result result;
  for (std::size_t s = 1; s <= max_s; ++s) {
    std::vector<int> ids(s);
    for (std::size_t j = 0; j < s; ++j) {
      ids[j] = static_cast<int>(j);
    }
    do {
      ++result.explored;
      if ((result.explored & 1023u) == 0 && stop.expired()) {
        result.exhausted_up_to = s - 1;
        return result;
      }
      if (bnn_candidate_ok(ids, truth, domain)) {
        std::vector<char> labels(s);
        for (std::size_t j = 0; j < s; ++j) {
          labels[j] = truth[static_cast<std::size_t>(ids[j])];
        }
        result.witness = boolean_witness(ids, labels, n);
        result.optimum = s;
        result.exhausted_up_to = s - 1;
        if (!satisfies_nn(f, *result.witness)) {
          throw construction_error("search witness failed independent re-verification");
        }
        return result;
      }
    } while (next_combination(ids, static_cast<int>(domain)));
    result.exhausted_up_to = s;
  }
  return result;
}

search_result exact_knn_bnn(const boolean_function& f, int k, std::size_t max_size,
                            const search_limits& limits) {
  const int n = f.arity();
  if (n > 4) {
    throw arity_out_of_range("exhaustive k-NN search supports arity <= 4, got " +
                             std::to_string(n));
  }
  if (k < 1) {
    throw invalid_argument("k must be at least 1, got " + std::to_string(k));
  }
  const std::uint32_t domain = f.domain_size();
  const std::vector<char> truth = truth_table(f);
  const std::size_t max_s = std::min<std::size_t>(max_size, domain);
  const deadline stop(limits);

  search_result result;
  result.exhausted_up_to = std::min<std::size_t>(max_s, static_cast<std::size_t>(k) - 1);
  for (std::size_t s = static_cast<std::size_t>(k); s <= max_s; ++s) {
    std::vector<int> ids(s);
    for (std::size_t j = 0; j < s; ++j) {
      ids[j] = static_cast<int>(j);
    }
    do {
      // Labels are forced for k = 1 (nearest-neighbor semantics) and free
      // otherwise, enumerated in ascending mask order.
      const std::uint32_t mask_count = k == 1 ? 1u : (std::uint32_t{1} << s);
      for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        ++result.explored;
        if ((result.explored & 1023u) == 0 && stop.expired()) {
          result.exhausted_up_to = s - 1;
          return result;
        }
        std::vector<char> labels(s);
        for (std::size_t j = 0; j < s; ++j) {
          labels[j] = k == 1 ? truth[static_cast<std::size_t>(ids[j])]
                             : static_cast<char>((mask >> j) & 1u);
        }
        const bool ok = k == 1 ? bnn_candidate_ok(ids, truth, domain)
                               : knn_candidate_ok(ids, mask, k, truth, domain);
        if (ok) {
          result.witness = boolean_witness(ids, labels, n);
          result.optimum = s;
          result.exhausted_up_to = s - 1;
          if (!satisfies_knn(f, *result.witness, k)) {
            throw construction_error("search witness failed independent re-verification");
          }
          return result;
        }
      }
    } while (next_combination(ids, static_cast<int>(domain)));
    result.exhausted_up_to = s;
  }
  return result;
}

search_result grid_nn_upper(const boolean_function& f, const std::vector<rational_point>& grid,
                            std::size_t max_size, const search_limits& limits) {
  const int n = f.arity();
  std::vector<rational_point> points;
  std::set<rational_point> seen;
  for (const rational_point& p : grid) {
    if (p.dimension() != n) {
      throw dimension_mismatch("grid point of dimension " + std::to_string(p.dimension()) +
                               " for a function of arity " + std::to_string(n));
    }
    if (seen.insert(p).second) {
      points.push_back(p);
    }
  }
  if (points.empty()) {
    throw invalid_argument("empty candidate grid");
  }
  const std::uint32_t domain = f.domain_size();
  const std::vector<char> truth = truth_table(f);
  const int grid_size = static_cast<int>(points.size());

  // Precompute the scaled squared-distance matrix grid x cube once; the
  // search inner loop is then pure integer comparisons.
  const nn_representation grid_as_rep(n, points, {});
  const distance_table table(grid_as_rep);
  std::vector<std::vector<bigint>> dist(static_cast<std::size_t>(grid_size));
  for (int g = 0; g < grid_size; ++g) {
    dist[static_cast<std::size_t>(g)].reserve(domain);
    for (std::uint32_t x = 0; x < domain; ++x) {
      dist[static_cast<std::size_t>(g)].push_back(
          table.scaled_sqdist(static_cast<std::size_t>(g), x));
    }
  }
  // Boolean grid points carry their forced label; others try both labels.
  std::vector<int> forced(static_cast<std::size_t>(grid_size), -1);
  for (int g = 0; g < grid_size; ++g) {
    if (points[static_cast<std::size_t>(g)].is_boolean()) {
      forced[static_cast<std::size_t>(g)] =
          truth[points[static_cast<std::size_t>(g)].boolean_bits()];
    }
  }
  const deadline stop(limits);

  search_result result;
  const std::size_t max_s = std::min<std::size_t>(max_size, static_cast<std::size_t>(grid_size));
  std::vector<char> labels;
  for (std::size_t s = 1; s <= max_s; ++s) {
    std::vector<int> ids(s);
    for (std::size_t j = 0; j < s; ++j) {
      ids[j] = static_cast<int>(j);
    }
    do {
      std::vector<int> free_slots;
      for (std::size_t j = 0; j < s; ++j) {
        if (forced[static_cast<std::size_t>(ids[j])] < 0) {
          free_slots.push_back(static_cast<int>(j));
        }
      }
      const std::uint32_t mask_count = std::uint32_t{1} << free_slots.size();
      for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        ++result.explored;
        if ((result.explored & 255u) == 0 && stop.expired()) {
          result.exhausted_up_to = s - 1;
          return result;
        }
        labels.assign(s, 0);
        for (std::size_t j = 0; j < s; ++j) {
          const int fl = forced[static_cast<std::size_t>(ids[j])];
          labels[j] = fl >= 0 ? static_cast<char>(fl) : 0;
        }
        for (std::size_t b = 0; b < free_slots.size(); ++b) {
          labels[static_cast<std::size_t>(free_slots[b])] = (mask >> b) & 1u;
        }
        bool ok = true;
        for (std::uint32_t x = 0; x < domain && ok; ++x) {
          const bigint* best_pos = nullptr;
          const bigint* best_neg = nullptr;
          for (std::size_t j = 0; j < s; ++j) {
            const bigint& d = dist[static_cast<std::size_t>(ids[j])][x];
            const bigint*& best = labels[j] ? best_pos : best_neg;
            if (best == nullptr || d < *best) {
              best = &d;
            }
          }
          if (truth[x]) {
            ok = best_pos != nullptr && (best_neg == nullptr || *best_pos < *best_neg);
          } else {
            ok = best_neg != nullptr && (best_pos == nullptr || *best_neg < *best_pos);
          }
        }
        if (ok) {
          std::vector<rational_point> positives;
          std::vector<rational_point> negatives;
          for (std::size_t j = 0; j < s; ++j) {
            (labels[j] ? positives : negatives)
                .push_back(points[static_cast<std::size_t>(ids[j])]);
          }
          result.witness = nn_representation(n, std::move(positives), std::move(negatives));
          result.optimum = s;
          result.exhausted_up_to = s - 1;
          if (!satisfies_nn(f, *result.witness)) {
            throw construction_error("search witness failed independent re-verification");
          }
          return result;
        }
      }
    } while (next_combination(ids, grid_size));
    result.exhausted_up_to = s;
  }
  return result;
}

std::vector<rational_point> default_grid(int n) {
  if (n < 1 || n > boolean_function::max_arity) {
    throw arity_out_of_range("grid dimension must be between 1 and 24, got " + std::to_string(n));
  }
  std::vector<rational_point> grid;
  std::set<rational_point> seen;
  const auto add = [&](rational_point p) {
    if (seen.insert(p).second) {
      grid.push_back(std::move(p));
    }
  };
  const std::uint32_t domain = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < domain; ++a) {
    add(to_rational_point(make_boolean_point(a, n)));
  }
  for (int l = 0; l <= n; ++l) {
    std::vector<rational> coords(static_cast<std::size_t>(n), rational(l, n));
    add(rational_point(std::move(coords)));
  }
  return grid;
}

}  // namespace nnrep
