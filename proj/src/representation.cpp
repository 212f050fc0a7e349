#include "nnrep/representation.hpp"

#include <algorithm>
#include <map>

#include "nnrep/errors.hpp"

namespace nnrep {

nn_representation::nn_representation(int dimension, std::vector<rational_point> positives,
                                     std::vector<rational_point> negatives)
    : dimension_(dimension), positives_(std::move(positives)), negatives_(std::move(negatives)) {
  if (dimension_ < 1 || dimension_ > boolean_function::max_arity) {
    throw arity_out_of_range("representation dimension must be between 1 and 24, got " +
                             std::to_string(dimension_));
  }
  std::map<rational_point, label> seen;
  const auto admit = [&](const std::vector<rational_point>& side, label side_label) {
    for (const rational_point& p : side) {
      if (p.dimension() != dimension_) {
        throw dimension_mismatch("prototype of dimension " + std::to_string(p.dimension()) +
                                 " in a representation of dimension " + std::to_string(dimension_));
      }
      const auto [it, inserted] = seen.emplace(p, side_label);
      if (!inserted) {
        throw invalid_representation(it->second == side_label
                                         ? "duplicate prototype within one side"
                                         : "prototype listed as both positive and negative");
      }
    }
  };
  admit(positives_, label::positive);
  admit(negatives_, label::negative);
}

distance_table::distance_table(const nn_representation& rep) {
  positive_count_ = rep.positives().size();
  const int n = rep.dimension();

  // First pass: exact rational linear forms. On Boolean x,
  // sqdist(x, u) = |u|^2 + sum over set coordinates i of (1 - 2 u_i).
  std::vector<rational> bases;
  std::vector<std::vector<rational>> coeffs;
  bigint scale = 1;
  const auto add = [&](const rational_point& u) {
    rational norm = 0;
    std::vector<rational> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      norm += u[i] * u[i];
      row[static_cast<std::size_t>(i)] = rational(1) - 2 * u[i];
      scale = boost::multiprecision::lcm(scale, denominator(row[static_cast<std::size_t>(i)]));
    }
    scale = boost::multiprecision::lcm(scale, denominator(norm));
    bases.push_back(std::move(norm));
    coeffs.push_back(std::move(row));
  };
  for (const rational_point& u : rep.positives()) {
    add(u);
  }
  for (const rational_point& u : rep.negatives()) {
    add(u);
  }

  // Second pass: clear denominators with the common scale.
  base_.reserve(bases.size());
  coeff_.reserve(coeffs.size());
  for (std::size_t j = 0; j < bases.size(); ++j) {
    base_.push_back(numerator(bases[j]) * (scale / denominator(bases[j])));
    std::vector<bigint> row;
    row.reserve(coeffs[j].size());
    for (const rational& c : coeffs[j]) {
      row.push_back(numerator(c) * (scale / denominator(c)));
    }
    coeff_.push_back(std::move(row));
  }
}

std::optional<label> classify_nn_scaled(const distance_table& table, std::uint32_t point_bits) {
  std::optional<bigint> best_pos;
  std::optional<bigint> best_neg;
  const std::size_t m = table.prototype_count();
  for (std::size_t j = 0; j < m; ++j) {
    bigint d = table.scaled_sqdist(j, point_bits);
    std::optional<bigint>& best = j < table.positive_count() ? best_pos : best_neg;
    if (!best || d < *best) {
      best = std::move(d);
    }
  }
  if (!best_pos && !best_neg) {
    throw empty_representation("classification against a representation with no prototypes");
  }
  if (!best_pos) {
    return label::negative;
  }
  if (!best_neg) {
    return label::positive;
  }
  if (*best_pos < *best_neg) {
    return label::positive;
  }
  if (*best_neg < *best_pos) {
    return label::negative;
  }
  return std::nullopt;  // tie: equal side minima
}

std::optional<label> classify_knn_scaled(const distance_table& table, std::uint32_t point_bits,
                                         int k) {
  const std::size_t m = table.prototype_count();
  if (k < 1) {
    throw invalid_argument("k must be at least 1, got " + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) > m) {
    throw k_too_large("k = " + std::to_string(k) + " exceeds the prototype count " +
                      std::to_string(m));
  }
  if (k == 1) {
    // With a single neighbor the vote degenerates to plain nearest-neighbor
    // classification, same-label distance ties included.
    return classify_nn_scaled(table, point_bits);
  }
  if (static_cast<std::size_t>(k) == m) {
    std::size_t positives = table.positive_count();
    return 2 * positives >= static_cast<std::size_t>(k) ? label::positive : label::negative;
  }

  std::vector<std::pair<bigint, bool>> dist;  // (scaled distance, is positive)
  dist.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    dist.emplace_back(table.scaled_sqdist(j, point_bits), j < table.positive_count());
  }
  std::sort(dist.begin(), dist.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t uk = static_cast<std::size_t>(k);
  if (dist[uk - 1].first == dist[uk].first) {
    return std::nullopt;  // the k nearest prototypes are not a well-defined set
  }
  std::size_t positives = 0;
  for (std::size_t j = 0; j < uk; ++j) {
    positives += dist[j].second ? 1 : 0;
  }
  return 2 * positives >= uk ? label::positive : label::negative;
}

namespace {

void check_point(const nn_representation& rep, const boolean_point& a) {
  if (a.dimension != rep.dimension()) {
    throw dimension_mismatch("point of dimension " + std::to_string(a.dimension) +
                             " classified against a representation of dimension " +
                             std::to_string(rep.dimension()));
  }
}

void check_function(const boolean_function& f, const nn_representation& rep) {
  if (f.arity() != rep.dimension()) {
    throw dimension_mismatch("function arity " + std::to_string(f.arity()) +
                             " against representation dimension " +
                             std::to_string(rep.dimension()));
  }
}

template <typename Classify>
verification_report run_verification(const boolean_function& f, Classify&& classify) {
  verification_report report;
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    const std::optional<label> outcome = classify(a);
    const label expected = f.value(a) ? label::positive : label::negative;
    if (!outcome) {
      report.tie_points.push_back(a);
    } else if (*outcome != expected) {
      report.counterexamples.push_back({a, expected, *outcome});
    }
  }
  report.ok = report.counterexamples.empty() && report.tie_points.empty();
  return report;
}

template <typename Classify>
bool run_satisfies(const boolean_function& f, Classify&& classify) {
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    const std::optional<label> outcome = classify(a);
    const label expected = f.value(a) ? label::positive : label::negative;
    if (!outcome || *outcome != expected) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<label> classify_nn(const nn_representation& rep, const boolean_point& a) {
  check_point(rep, a);
  if (rep.size() == 0) {
    throw empty_representation("classification against a representation with no prototypes");
  }
  const distance_table table(rep);
  return classify_nn_scaled(table, a.bits);
}

std::optional<label> classify_knn(const nn_representation& rep, const boolean_point& a, int k) {
  check_point(rep, a);
  if (rep.size() == 0) {
    throw empty_representation("classification against a representation with no prototypes");
  }
  const distance_table table(rep);
  return classify_knn_scaled(table, a.bits, k);
}

verification_report verify_nn(const boolean_function& f, const nn_representation& rep) {
  check_function(f, rep);
  if (rep.size() == 0) {
    throw empty_representation("verification against a representation with no prototypes");
  }
  const distance_table table(rep);
  return run_verification(f, [&](std::uint32_t a) { return classify_nn_scaled(table, a); });
}

verification_report verify_knn(const boolean_function& f, const nn_representation& rep, int k) {
  check_function(f, rep);
  if (rep.size() == 0) {
    throw empty_representation("verification against a representation with no prototypes");
  }
  const distance_table table(rep);
  if (k < 1) {
    throw invalid_argument("k must be at least 1, got " + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) > rep.size()) {
    throw k_too_large("k = " + std::to_string(k) + " exceeds the prototype count " +
                      std::to_string(rep.size()));
  }
  return run_verification(f, [&](std::uint32_t a) { return classify_knn_scaled(table, a, k); });
}

bool satisfies_nn(const boolean_function& f, const nn_representation& rep) {
  check_function(f, rep);
  if (rep.size() == 0) {
    throw empty_representation("verification against a representation with no prototypes");
  }
  const distance_table table(rep);
  return run_satisfies(f, [&](std::uint32_t a) { return classify_nn_scaled(table, a); });
}

bool satisfies_knn(const boolean_function& f, const nn_representation& rep, int k) {
  check_function(f, rep);
  if (rep.size() == 0) {
    throw empty_representation("verification against a representation with no prototypes");
  }
  if (k < 1) {
    throw invalid_argument("k must be at least 1, got " + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) > rep.size()) {
    throw k_too_large("k = " + std::to_string(k) + " exceeds the prototype count " +
                      std::to_string(rep.size()));
  }
  const distance_table table(rep);
  return run_satisfies(f, [&](std::uint32_t a) { return classify_knn_scaled(table, a, k); });
}

}  // namespace nnrep
