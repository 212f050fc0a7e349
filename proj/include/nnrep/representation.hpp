#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/points.hpp"

namespace nnrep {

enum class label { negative = 0, positive = 1 };

// Two disjoint, duplicate-free prototype sets in R^n. A hypercube point is
// positive iff some positive prototype is strictly nearer than every negative
// prototype (and vice versa); equality of the two side minima is a tie, which
// is never silently resolved.
class nn_representation {
 public:
  nn_representation(int dimension, std::vector<rational_point> positives,
                    std::vector<rational_point> negatives);

  int dimension() const { return dimension_; }
  const std::vector<rational_point>& positives() const { return positives_; }
  const std::vector<rational_point>& negatives() const { return negatives_; }
  std::size_t size() const { return positives_.size() + negatives_.size(); }

 private:
  int dimension_;
  std::vector<rational_point> positives_;
  std::vector<rational_point> negatives_;
};

// Scaled-integer view of squared distances from hypercube points to the
// prototypes: scaled_sqdist(j, x) = scale * sqdist(x, prototype_j) with one
// common positive integer scale, so distance comparisons are plain integer
// comparisons. Prototypes are indexed positives first, then negatives.
class distance_table {
 public:
  explicit distance_table(const nn_representation& rep);

  std::size_t prototype_count() const { return base_.size(); }
  std::size_t positive_count() const { return positive_count_; }
  label label_of(std::size_t j) const {
    return j < positive_count_ ? label::positive : label::negative;
  }

  bigint scaled_sqdist(std::size_t j, std::uint32_t point_bits) const {
    bigint d = base_[j];
    const std::vector<bigint>& row = coeff_[j];
    std::uint32_t rest = point_bits;
    while (rest != 0) {
      const unsigned i = static_cast<unsigned>(__builtin_ctz(rest));
      d += row[i];
      rest &= rest - 1;
    }
    return d;
  }

 private:
  std::vector<bigint> base_;                // scale * |u|^2
  std::vector<std::vector<bigint>> coeff_;  // scale * (1 - 2 u_i)
  std::size_t positive_count_ = 0;
};

// Nearest-neighbor classification of a hypercube point. Returns nullopt on a
// tie (equal side minima). Throws empty_representation when there are no
// prototypes and dimension_mismatch on arity disagreement.
std::optional<label> classify_nn(const nn_representation& rep, const boolean_point& a);

// k-nearest-neighbor classification: the point is positive iff at least k/2
// of its k nearest prototypes are positive. For 1 < k < size the k-th and
// (k+1)-th smallest distances must differ strictly, otherwise the k nearest
// are not a well-defined set and nullopt is returned; k = 1 coincides with
// classify_nn and k = size is a global majority vote. Throws k_too_large when
// k exceeds the prototype count.
std::optional<label> classify_knn(const nn_representation& rep, const boolean_point& a, int k);

struct counterexample {
  std::uint32_t point;  // assignment index
  label expected;
  label observed;
};

// ok is true iff both lists are empty. Points appear in ascending index order.
struct verification_report {
  bool ok = false;
  std::vector<counterexample> counterexamples;
  std::vector<std::uint32_t> tie_points;
};

// Exhaustive check of all 2^n hypercube points.
verification_report verify_nn(const boolean_function& f, const nn_representation& rep);
verification_report verify_knn(const boolean_function& f, const nn_representation& rep, int k);

// Early-abort variants for search inner loops: true iff verification would
// report ok, stopping at the first offending point.
bool satisfies_nn(const boolean_function& f, const nn_representation& rep);
bool satisfies_knn(const boolean_function& f, const nn_representation& rep, int k);

// Shared helpers for code that already holds a distance table.
std::optional<label> classify_nn_scaled(const distance_table& table, std::uint32_t point_bits);
std::optional<label> classify_knn_scaled(const distance_table& table, std::uint32_t point_bits,
                                         int k);

}  // namespace nnrep
