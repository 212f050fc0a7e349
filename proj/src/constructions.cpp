#include "nnrep/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

rational_point diagonal_point(int level, int n) {
  std::vector<rational> coords(static_cast<std::size_t>(n), rational(level, n));
  return rational_point(std::move(coords));
}

int check_range(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi) {
    throw arity_out_of_range(what + " must be between " + std::to_string(lo) + " and " +
                             std::to_string(hi) + ", got " + std::to_string(n));
  }
  return n;
}

}  // namespace

nn_representation build_symmetric(const symmetric_spec& spec) {
  const symmetric_spec checked = symmetric_spec::make(spec.arity, spec.levels);
  const int n = checked.arity;
  std::uint32_t level_mask = 0;
  for (int l : checked.levels) {
    level_mask |= 1u << l;
  }
  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  for (int l = 0; l <= n; ++l) {
    rational_point p = diagonal_point(l, n);
    if ((level_mask >> l) & 1u) {
      positives.push_back(std::move(p));
    } else {
      negatives.push_back(std::move(p));
    }
  }
  return nn_representation(n, std::move(positives), std::move(negatives));
}

nn_representation build_threshold(const threshold_spec& spec) {
  const int n = check_range(spec.arity(), 1, boolean_function::max_arity, "arity");
  bigint weight_norm = 0;
  for (const bigint& w : spec.weights) {
    weight_norm += w * w;
  }
  if (weight_norm == 0) {
    // Constant function: 1 iff 0 >= t; one prototype suffices.
    std::vector<rational_point> origin;
    origin.push_back(to_rational_point(make_boolean_point(0, n)));
    if (spec.threshold <= 0) {
      return nn_representation(n, std::move(origin), {});
    }
    return nn_representation(n, {}, std::move(origin));
  }
  // Center the pair on the hyperplane w.x = t - 1/2, which no Boolean point
  // can hit because w.x is an integer.
  const rational margin(2 * spec.threshold - 1, 2);
  const rational step = margin / rational(weight_norm);
  std::vector<rational> plus;
  std::vector<rational> minus;
  plus.reserve(static_cast<std::size_t>(n));
  minus.reserve(static_cast<std::size_t>(n));
  for (const bigint& w : spec.weights) {
    const rational center_i = step * rational(w);
    plus.push_back(center_i + rational(w));
    minus.push_back(center_i - rational(w));
  }
  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  positives.emplace_back(std::move(plus));
  negatives.emplace_back(std::move(minus));
  return nn_representation(n, std::move(positives), std::move(negatives));
}

nn_representation build_majority_bnn(int n) {
  check_range(n, 1, boolean_function::max_arity, "arity");
  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  const std::uint32_t all_ones = (n == 32) ? ~0u : (std::uint32_t{1} << n) - 1;
  negatives.push_back(to_rational_point(make_boolean_point(0, n)));
  if (n % 2 == 1) {
    positives.push_back(to_rational_point(make_boolean_point(all_ones, n)));
  } else {
    // Weight-(n-1) points with the zero in one of the first n/2 + 1
    // coordinates: every point of weight >= n/2 shares a zero coordinate with
    // one of them.
    for (int i = 0; i < n / 2 + 1; ++i) {
      positives.push_back(to_rational_point(make_boolean_point(all_ones ^ (1u << i), n)));
    }
  }
  return nn_representation(n, std::move(positives), std::move(negatives));
}

nn_representation build_parity_bnn(int n) {
  check_range(n, 1, 16, "arity");
  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t a = 0; a < size; ++a) {
    rational_point p = to_rational_point(make_boolean_point(a, n));
    if (std::popcount(a) & 1) {
      positives.push_back(std::move(p));
    } else {
      negatives.push_back(std::move(p));
    }
  }
  return nn_representation(n, std::move(positives), std::move(negatives));
}

namespace {

bool is_all_ones_minus_one(int n) { return (n & (n + 1)) == 0; }  // n = 2^r - 1

// Exact Hamming-ball partition around the perfect single-error-correcting
// code of length n = 2^r - 1: the syndrome of a point is the XOR of the
// 1-based indices of its set coordinates; flipping the syndrome coordinate
// maps the point to its unique codeword within distance 1.
ball_covering hamming_covering(int n) {
  ball_covering cov;
  cov.dimension = n;
  const std::uint32_t size = std::uint32_t{1} << n;
  cov.cell_index.assign(size, -1);
  std::map<std::uint32_t, std::vector<std::uint32_t>> cells;
  for (std::uint32_t a = 0; a < size; ++a) {
    std::uint32_t syndrome = 0;
    std::uint32_t rest = a;
    while (rest != 0) {
      syndrome ^= static_cast<std::uint32_t>(std::countr_zero(rest)) + 1;
      rest &= rest - 1;
    }
    const std::uint32_t center = syndrome == 0 ? a : (a ^ (1u << (syndrome - 1)));
    cells[center].push_back(a);
  }
  for (auto& [center, members] : cells) {
    cov.centers.push_back(center);
    std::sort(members.begin(), members.end());
    for (std::uint32_t p : members) {
      cov.cell_index[p] = static_cast<int>(cov.cells.size());
    }
    cov.cells.push_back(std::move(members));
  }
  return cov;
}

ball_covering greedy_covering(int n) {
  ball_covering cov;
  cov.dimension = n;
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<bool> covered(size, false);
  std::uint32_t remaining = size;

  // Phase 1: pick centers whose radius-1 ball covers the most uncovered
  // points, lowest index first on ties.
  const auto ball_gain = [&](std::uint32_t c) {
    int gain = covered[c] ? 0 : 1;
    for (int i = 0; i < n; ++i) {
      if (!covered[c ^ (1u << i)]) {
        ++gain;
      }
    }
    return gain;
  };
  while (remaining > 0) {
    std::uint32_t best = 0;
    int best_gain = -1;
    for (std::uint32_t c = 0; c < size; ++c) {
      const int gain = ball_gain(c);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    cov.centers.push_back(best);
    if (!covered[best]) {
      covered[best] = true;
      --remaining;
    }
    for (int i = 0; i < n; ++i) {
      const std::uint32_t p = best ^ (1u << i);
      if (!covered[p]) {
        covered[p] = true;
        --remaining;
      }
    }
  }

  // Phase 2: each center owns itself; every other point joins the
  // lowest-index center within distance 1.
  cov.cell_index.assign(size, -1);
  cov.cells.assign(cov.centers.size(), {});
  for (std::size_t i = 0; i < cov.centers.size(); ++i) {
    cov.cell_index[cov.centers[i]] = static_cast<int>(i);
  }
  for (std::uint32_t p = 0; p < size; ++p) {
    if (cov.cell_index[p] >= 0) {
      continue;  // a chosen center
    }
    for (std::size_t i = 0; i < cov.centers.size(); ++i) {
      const std::uint32_t diff = p ^ cov.centers[i];
      if (std::popcount(diff) <= 1) {
        cov.cell_index[p] = static_cast<int>(i);
        break;
      }
    }
  }
  for (std::uint32_t p = 0; p < size; ++p) {
    cov.cells[static_cast<std::size_t>(cov.cell_index[p])].push_back(p);
  }
  return cov;
}

void check_covering(const ball_covering& cov) {
  const std::uint32_t size = std::uint32_t{1} << cov.dimension;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < cov.cells.size(); ++i) {
    bool center_present = false;
    for (std::uint32_t p : cov.cells[i]) {
      const int dist = std::popcount(p ^ cov.centers[i]);
      if (dist > 1) {
        throw construction_error("covering cell escapes the radius-1 ball of its center");
      }
      center_present |= p == cov.centers[i];
      if (cov.cell_index[p] != static_cast<int>(i)) {
        throw construction_error("covering cell membership is inconsistent");
      }
    }
    if (!center_present) {
      throw construction_error("covering center missing from its own cell");
    }
    total += cov.cells[i].size();
  }
  if (total != size) {
    throw construction_error("covering cells do not partition the cube");
  }
}

}  // namespace

ball_covering cover_hypercube(int n) {
  check_range(n, 1, 12, "arity");
  ball_covering cov = is_all_ones_minus_one(n) ? hamming_covering(n) : greedy_covering(n);
  check_covering(cov);
  return cov;
}

rational_point centroid(const std::vector<std::uint32_t>& points, int dimension) {
  if (points.empty()) {
    throw invalid_argument("centroid of an empty point list");
  }
  check_range(dimension, 1, boolean_function::max_arity, "dimension");
  std::vector<rational> coords(static_cast<std::size_t>(dimension), rational(0));
  for (std::uint32_t p : points) {
    for (int i = 0; i < dimension; ++i) {
      if ((p >> i) & 1u) {
        coords[static_cast<std::size_t>(i)] += 1;
      }
    }
  }
  const rational count(static_cast<long long>(points.size()));
  for (rational& c : coords) {
    c /= count;
  }
  return rational_point(std::move(coords));
}

nn_representation build_covering(const boolean_function& f) {
  return build_covering(f, cover_hypercube(f.arity()));
}

nn_representation build_covering(const boolean_function& f, const ball_covering& covering) {
  const int n = f.arity();
  if (covering.dimension != n) {
    throw dimension_mismatch("covering dimension " + std::to_string(covering.dimension) +
                             " does not match function arity " + std::to_string(n));
  }

  std::vector<std::pair<rational_point, label>> prototypes;  // in emission order
  std::map<rational_point, label> seen;
  const auto emit = [&](rational_point p, label l) {
    const auto [it, inserted] = seen.emplace(p, l);
    if (!inserted) {
      if (it->second != l) {
        throw construction_error("covering produced one prototype with both labels");
      }
      return;  // exact duplicate across cells: merge
    }
    prototypes.emplace_back(std::move(p), l);
  };
  const auto emit_side = [&](const std::vector<std::uint32_t>& side, label l) {
    if (side.empty()) {
      return;
    }
    if (side.size() >= 3) {
      emit(centroid(side, n), l);
    } else {
      for (std::uint32_t p : side) {
        emit(to_rational_point(make_boolean_point(p, n)), l);
      }
    }
  };

  for (std::size_t i = 0; i < covering.cells.size(); ++i) {
    const std::uint32_t center = covering.centers[i];
    std::vector<std::uint32_t> ones;
    std::vector<std::uint32_t> zeros;
    for (std::uint32_t p : covering.cells[i]) {
      if (p == center) {
        continue;
      }
      (f.value(p) ? ones : zeros).push_back(p);
    }
    emit_side(ones, label::positive);
    emit_side(zeros, label::negative);
    emit(to_rational_point(make_boolean_point(center, n)),
         f.value(center) ? label::positive : label::negative);
  }

  std::vector<rational_point> positives;
  std::vector<rational_point> negatives;
  for (auto& [point, l] : prototypes) {
    (l == label::positive ? positives : negatives).push_back(std::move(point));
  }
  nn_representation rep(n, std::move(positives), std::move(negatives));
  if (!satisfies_nn(f, rep)) {
    throw construction_error("covering-based representation failed its re-check");
  }
  return rep;
}

}  // namespace nnrep
