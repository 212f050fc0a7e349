// Acceptance suite: twelve end-to-end checks over the whole library plus one
// determinism check through the command-line binary (path given as argv[1]).
// Prints one [PASS]/[FAIL] line per check; the exit code is the number of
// failures.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/constructions.hpp"
#include "nnrep/errors.hpp"
#include "nnrep/ldt.hpp"
#include "nnrep/minimize.hpp"
#include "nnrep/points.hpp"
#include "nnrep/prng.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/representation.hpp"
#include "nnrep/serialization.hpp"

namespace {

using namespace nnrep;

void ensure(bool condition, const std::string& message) {
  if (!condition) {
    throw std::runtime_error(message);
  }
}

symmetric_spec mask_spec(int n, std::uint32_t mask) {
  std::vector<int> levels;
  for (int l = 0; l <= n; ++l) {
    if ((mask >> l) & 1u) {
      levels.push_back(l);
    }
  }
  return symmetric_spec::make(n, std::move(levels));
}

// Integer weights in [-w, w] and a threshold in [-w*n, w*n + 1].
threshold_spec random_threshold(int n, int w, counter_rng& rng) {
  threshold_spec spec;
  for (int i = 0; i < n; ++i) {
    spec.weights.emplace_back(static_cast<long long>(rng.below(2 * w + 1)) - w);
  }
  spec.threshold =
      bigint(static_cast<long long>(rng.below(2 * static_cast<std::uint64_t>(w) * n + 2)) -
             static_cast<long long>(w) * n);
  return spec;
}

// Re-derives the value classes of every covering cell and checks that each
// produced centroid lies strictly inside its own class's unit ball while
// staying at squared distance >= 1 from every point outside the radius-1
// ball of the cell's center. Returns the number of centroids inspected.
std::size_t centroid_separation_checks(const boolean_function& f, const ball_covering& cov) {
  const int n = cov.dimension;
  const rational one(1);
  std::vector<rational_point> cube;
  for (std::uint32_t y = 0; y < f.domain_size(); ++y) {
    cube.push_back(to_rational_point(make_boolean_point(y, n)));
  }
  std::size_t inspected = 0;
  for (std::size_t ci = 0; ci < cov.cell_count(); ++ci) {
    const std::uint32_t center = cov.centers[ci];
    for (int v = 0; v <= 1; ++v) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t p : cov.cells[ci]) {
        if (p != center && f.value(p) == (v == 1)) {
          members.push_back(p);
        }
      }
      if (members.size() < 3) {
        continue;  // small classes keep their points; no centroid is produced
      }
      const rational_point c = centroid(members, n);
      for (std::uint32_t a : members) {
        ensure(sqdist(c, cube[a]) < one, "centroid not strictly inside its class");
      }
      for (std::uint32_t y = 0; y < f.domain_size(); ++y) {
        if (std::popcount(y ^ center) >= 2) {
          ensure(sqdist(c, cube[y]) >= one,
                 "centroid closer than 1 to a point outside the center ball");
        }
      }
      ++inspected;
    }
  }
  return inspected;
}

bool same_report(const verification_report& a, const verification_report& b) {
  if (a.ok != b.ok || a.tie_points != b.tie_points ||
      a.counterexamples.size() != b.counterexamples.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    if (a.counterexamples[i].point != b.counterexamples[i].point ||
        a.counterexamples[i].expected != b.counterexamples[i].expected ||
        a.counterexamples[i].observed != b.counterexamples[i].observed) {
      return false;
    }
  }
  return true;
}

// Checks, against independently sorted exact distances, that classify_knn is
// undefined exactly when the deciding distances coincide, and that every
// defined answer equals the majority vote among the k nearest prototypes.
void check_definedness_rule(const nn_representation& rep) {
  const int n = rep.dimension();
  const int m = static_cast<int>(rep.size());
  for (std::uint32_t xb = 0; xb < (1u << n); ++xb) {
    const boolean_point x = make_boolean_point(xb, n);
    const rational_point xp = to_rational_point(x);
    std::vector<std::pair<rational, int>> dist;
    for (const rational_point& p : rep.positives()) {
      dist.emplace_back(sqdist(xp, p), 1);
    }
    for (const rational_point& q : rep.negatives()) {
      dist.emplace_back(sqdist(xp, q), 0);
    }
    std::vector<std::pair<rational, int>> sorted = dist;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int k = 1; k <= m; ++k) {
      const std::optional<label> got = classify_knn(rep, x, k);
      bool defined = false;
      label expect = label::negative;
      if (k == m) {
        defined = true;
        const int pos = static_cast<int>(rep.positives().size());
        expect = 2 * pos >= k ? label::positive : label::negative;
      } else if (k == 1) {
        rational best_pos = sqdist(xp, rep.positives().front());
        for (const rational_point& p : rep.positives()) {
          best_pos = std::min(best_pos, rational(sqdist(xp, p)));
        }
        rational best_neg = sqdist(xp, rep.negatives().front());
        for (const rational_point& q : rep.negatives()) {
          best_neg = std::min(best_neg, rational(sqdist(xp, q)));
        }
        defined = best_pos != best_neg;
        expect = best_pos < best_neg ? label::positive : label::negative;
      } else {
        defined = sorted[static_cast<std::size_t>(k) - 1].first !=
                  sorted[static_cast<std::size_t>(k)].first;
        int pos = 0;
        for (int i = 0; i < k; ++i) {
          pos += sorted[static_cast<std::size_t>(i)].second;
        }
        expect = 2 * pos >= k ? label::positive : label::negative;
      }
      ensure(got.has_value() == defined,
             "definedness disagrees with the sorted-distance rule");
      if (defined) {
        ensure(*got == expect, "vote disagrees with the k nearest prototypes");
      }
    }
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  ensure(in.good(), "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  int failures = 0;

  const auto criterion = [&failures](int number, const std::string& name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      detail = body();
      ok = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " " << (number < 10 ? "0" : "") << number
              << " " << name << (detail.empty() ? "" : ": " + detail) << " (" << elapsed
              << " ms)" << std::endl;
    if (!ok) {
      ++failures;
    }
  };

  criterion(1, "every symmetric function gets a verifying diagonal representation of size n+1",
            [] {
              std::uint64_t count = 0;
              for (int n = 1; n <= 8; ++n) {
                for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
                  const symmetric_spec spec = mask_spec(n, mask);
                  const nn_representation rep = build_symmetric(spec);
                  ensure(rep.size() == static_cast<std::size_t>(n) + 1,
                         "unexpected size for n=" + std::to_string(n));
                  ensure(verify_nn(make_symmetric(spec), rep).ok,
                         "verification failed for n=" + std::to_string(n) + " mask=" +
                             std::to_string(mask));
                  ++count;
                }
              }
              return std::to_string(count) + " functions, n = 1..8";
            });

  criterion(2, "seeded integer threshold functions verify with at most two prototypes",
            [] {
              counter_rng rng(202602);
              std::uint64_t count = 0;
              for (int n = 2; n <= 12; ++n) {
                for (int trial = 0; trial < 200; ++trial) {
                  const threshold_spec spec = random_threshold(n, 8, rng);
                  const nn_representation rep = build_threshold(spec);
                  ensure(rep.size() <= 2, "more than two prototypes");
                  ensure(verify_nn(make_threshold(spec), rep).ok,
                         "verification failed at n=" + std::to_string(n));
                  ++count;
                }
              }
              return std::to_string(count) + " specs, weights in [-8,8], n = 2..12";
            });

  criterion(3, "the smallest Boolean-prototype representation of parity uses every cube point",
            [] {
              std::string optima;
              for (int n = 2; n <= 4; ++n) {
                const search_result r = exact_bnn(make_parity(n));
                ensure(r.optimum.has_value(), "search did not finish at n=" + std::to_string(n));
                ensure(*r.optimum == (1u << n),
                       "optimum " + std::to_string(*r.optimum) + " at n=" + std::to_string(n));
                optima += (optima.empty() ? "" : ", ") + std::to_string(*r.optimum);
              }
              return "optima " + optima + " for n = 2, 3, 4";
            });

  criterion(4, "majority optima: two Boolean prototypes when odd, at most n/2+2 when even",
            [] {
              const search_result r3 = exact_bnn(make_majority(3));
              ensure(r3.optimum && *r3.optimum == 2, "3-variable optimum is not 2");
              search_limits limits;
              limits.max_size = 2;
              const search_result r5 = exact_bnn(make_majority(5), limits);
              ensure(r5.optimum && *r5.optimum == 2, "5-variable optimum is not 2");
              const nn_representation rep4 = build_majority_bnn(4);
              ensure(rep4.size() == 4, "even construction size is not n/2+2");
              ensure(verify_nn(make_majority(4), rep4).ok, "even construction fails to verify");
              const search_result r4 = exact_bnn(make_majority(4));
              ensure(r4.optimum.has_value(), "4-variable search did not finish");
              ensure(*r4.optimum <= 4, "4-variable optimum exceeds the construction");
              return "optima 2, 2; 4-variable optimum " + std::to_string(*r4.optimum) +
                     " <= 4";
            });

  criterion(5, "rational prototypes beat Boolean ones on the two-variable conjunction",
            [] {
              const boolean_function f = parse_function("th:2:2");
              const search_result boolean_best = exact_bnn(f);
              ensure(boolean_best.optimum && *boolean_best.optimum == 3,
                     "Boolean optimum is not 3");
              std::vector<rational_point> grid = default_grid(2);
              const function_spec spec = parse_function_spec("th:2:2");
              const nn_representation two = build_threshold(*spec.threshold);
              for (const rational_point& p : two.positives()) {
                grid.push_back(p);
              }
              for (const rational_point& q : two.negatives()) {
                grid.push_back(q);
              }
              const search_result rational_best = grid_nn_upper(f, grid, 2);
              ensure(rational_best.optimum && *rational_best.optimum == 2,
                     "no two-prototype rational representation found");
              return "Boolean optimum 3, rational grid optimum 2";
            });

  criterion(6, "ball-covering representations verify within five prototypes per cell",
            [] {
              const ball_covering cov3 = cover_hypercube(3);
              std::size_t centroids = 0;
              for (std::uint32_t table = 0; table < 256; ++table) {
                boolean_function f(3);
                for (std::uint32_t a = 0; a < 8; ++a) {
                  f.set_value(a, (table >> a) & 1u);
                }
                const nn_representation rep = build_covering(f);
                ensure(verify_nn(f, rep).ok, "verification failed on a 3-variable table");
                ensure(rep.size() <= 5 * cov3.cell_count(), "size beyond 5 per cell at n=3");
                centroids += centroid_separation_checks(f, cov3);
              }
              const ball_covering cov7 = cover_hypercube(7);
              ensure(cov7.cell_count() == 16, "7-cube covering is not the 16-ball partition");
              counter_rng rng(202606);
              for (int trial = 0; trial < 100; ++trial) {
                const boolean_function f = random_function(7, rng);
                const nn_representation rep = build_covering(f);
                ensure(verify_nn(f, rep).ok, "verification failed on a 7-variable sample");
                ensure(rep.size() <= 5 * cov7.cell_count(), "size beyond 5 per cell at n=7");
                centroids += centroid_separation_checks(f, cov7);
              }
              return "256 exhaustive 3-variable tables + 100 seeded 7-variable samples, " +
                     std::to_string(centroids) + " centroids separated";
            });

  criterion(7, "compilation to a sign polynomial is faithful with one monomial per prototype",
            [] {
              std::uint64_t compiled = 0;
              const auto check_compile = [&compiled](const boolean_function& f,
                                                     const nn_representation& rep) {
                const compiled_ptf out = compile_ptf(f, rep);
                ensure(out.poly.terms.size() == rep.size(), "term count != prototype count");
                ensure(verify_ptf(f, out.poly).ok, "sign disagrees with the function");
                ensure(check_margin(f, out.poly), "no single-monomial dominance");
                ++compiled;
              };
              for (int n = 1; n <= 6; ++n) {
                for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
                  const symmetric_spec spec = mask_spec(n, mask);
                  check_compile(make_symmetric(spec), build_symmetric(spec));
                }
              }
              counter_rng rng(202607);
              for (int n = 1; n <= 6; ++n) {
                for (int trial = 0; trial < 25; ++trial) {
                  const threshold_spec spec = random_threshold(n, 2, rng);
                  check_compile(make_threshold(spec), build_threshold(spec));
                }
              }
              for (int n = 1; n <= 6; ++n) {
                check_compile(make_majority(n), build_majority_bnn(n));
              }
              counter_rng cov_rng(202617);
              for (int n = 1; n <= 6; ++n) {
                for (int trial = 0; trial < 5; ++trial) {
                  const boolean_function f = random_function(n, cov_rng);
                  check_compile(f, build_covering(f));
                }
              }
              const function_spec golden_spec = parse_function_spec("th:1:1");
              const compiled_ptf golden =
                  compile_ptf(realize(golden_spec), build_threshold(*golden_spec.threshold));
              ensure(polynomial_to_json(golden.poly) ==
                         R"({"n":1,"terms":[{"sign":1,"c":3,"e":[20]},{"sign":-1,"c":11,"e":[4]}]})",
                     "golden polynomial bytes changed");
              ensure(params_to_json(golden.params) == R"({"B":3,"M":4,"A":4})",
                     "golden parameter bytes changed");
              return std::to_string(compiled) + " compilations plus a byte-exact golden";
            });

  criterion(8, "compiled term counts respect the parity and inner-product floors",
            [] {
              for (int n = 1; n <= 6; ++n) {
                const function_spec fs = parse_function_spec("parity:" + std::to_string(n));
                std::vector<int> odd;
                for (int l = 1; l <= n; l += 2) {
                  odd.push_back(l);
                }
                const symmetric_spec spec = symmetric_spec::make(n, std::move(odd));
                const compiled_ptf diag = compile_ptf(realize(fs), build_symmetric(spec));
                const term_count_record rec = term_count_report(fs, diag.poly);
                ensure(rec.meets_bound && rec.tight &&
                           rec.term_count == static_cast<std::size_t>(n) + 1,
                       "diagonal parity polynomial misses the n+1 floor at n=" +
                           std::to_string(n));
              }
              for (int n = 2; n <= 4; ++n) {
                const function_spec fs = parse_function_spec("parity:" + std::to_string(n));
                const compiled_ptf cube = compile_ptf(realize(fs), build_parity_bnn(n));
                const term_count_record rec = term_count_report(fs, cube.poly);
                ensure(rec.meets_bound && rec.lower_bound == static_cast<std::size_t>(n) + 1 &&
                           rec.term_count == (1u << n),
                       "cube parity polynomial inconsistent at n=" + std::to_string(n));
              }
              const function_spec ip1 = parse_function_spec("ip:1");
              const function_spec and2 = parse_function_spec("th:2:2");
              const compiled_ptf p1 = compile_ptf(realize(ip1), build_threshold(*and2.threshold));
              const term_count_record r1 = term_count_report(ip1, p1.poly);
              ensure(r1.meets_bound && r1.tight && r1.lower_bound == 2,
                     "two-monomial inner-product floor missed for one-bit halves");
              for (int h = 2; h <= 3; ++h) {
                const function_spec fs = parse_function_spec("ip:" + std::to_string(h));
                const boolean_function f = realize(fs);
                const compiled_ptf poly = compile_ptf(f, build_covering(f));
                const term_count_record rec = term_count_report(fs, poly.poly);
                ensure(rec.meets_bound,
                       "inner-product floor missed for " + std::to_string(h) + "-bit halves");
              }
              return "parity tight at n+1 (n = 1..6); inner-product floors met for 1..3-bit halves";
            });

  criterion(9, "1-nearest voting equals plain nearest-neighbor; ties surface exactly on equal distances",
            [] {
              counter_rng rng(202609);
              std::uint64_t pairs = 0;
              while (pairs < 1000) {
                const int kind = static_cast<int>(pairs % 5);
                const auto [rep, g] = [&]() -> std::pair<nn_representation, boolean_function> {
                  switch (kind) {
                    case 0: {
                      const int n = 1 + static_cast<int>(rng.below(6));
                      const symmetric_spec spec =
                          mask_spec(n, static_cast<std::uint32_t>(rng.below(1u << (n + 1))));
                      return {build_symmetric(spec), make_symmetric(spec)};
                    }
                    case 1: {
                      const int n = 2 + static_cast<int>(rng.below(5));
                      const threshold_spec spec = random_threshold(n, 8, rng);
                      return {build_threshold(spec), make_threshold(spec)};
                    }
                    case 2: {
                      const int n = 1 + static_cast<int>(rng.below(8));
                      return {build_majority_bnn(n), make_majority(n)};
                    }
                    case 3: {
                      const int n = 1 + static_cast<int>(rng.below(4));
                      return {build_parity_bnn(n), make_parity(n)};
                    }
                    default: {
                      const int n = 1 + static_cast<int>(rng.below(5));
                      const boolean_function f = random_function(n, rng);
                      return {build_covering(f), f};
                    }
                  }
                }();
                const boolean_function f =
                    pairs % 2 == 0 ? g : random_function(rep.dimension(), rng);
                ensure(same_report(verify_nn(f, rep), verify_knn(f, rep, 1)),
                       "1-nearest vote disagrees with nearest-neighbor");
                ++pairs;
              }

              // Crafted equal-distance fixtures, checked against independently
              // sorted exact distances for every k.
              const nn_representation line(
                  1, {rational_point({rational(0)}), rational_point({rational(2)})},
                  {rational_point({rational(1)})});
              ensure(!classify_knn(line, make_boolean_point(1, 1), 2).has_value(),
                     "equal second and third distances were silently resolved");
              check_definedness_rule(line);
              const nn_representation pair_rep(
                  2, {rational_point({rational(1), rational(1)})},
                  {rational_point({rational(0), rational(0)})});
              ensure(!classify_nn(pair_rep, make_boolean_point(1, 2)).has_value(),
                     "equal side minima were silently resolved");
              check_definedness_rule(pair_rep);
              const verification_report tie_report = verify_nn(make_parity(2), pair_rep);
              ensure(!tie_report.ok && tie_report.tie_points == std::vector<std::uint32_t>{1, 2},
                     "tie points not reported at the equidistant inputs");
              return "1000 seeded pairs across all five constructions; tie fixtures exact";
            });

  criterion(10, "counted classification matches the plain one within its comparison budget",
            [] {
              std::vector<nn_representation> reps;
              reps.push_back(build_parity_bnn(2));
              reps.push_back(build_parity_bnn(3));
              reps.push_back(build_majority_bnn(3));
              reps.push_back(build_majority_bnn(4));
              reps.push_back(build_symmetric(symmetric_spec::make(4, {2, 3, 4})));
              counter_rng cov_rng(202610);
              for (int n = 2; n <= 4; ++n) {
                reps.push_back(build_covering(random_function(n, cov_rng)));
              }
              std::uint64_t classifications = 0;
              for (const nn_representation& rep : reps) {
                const int m = static_cast<int>(rep.size());
                for (std::uint32_t xb = 0; xb < (1u << rep.dimension()); ++xb) {
                  const boolean_point x = make_boolean_point(xb, rep.dimension());
                  for (int k = 1; k <= m; ++k) {
                    const counted_result counted = knn_classify_counted(rep, x, k);
                    ensure(counted.result == classify_knn(rep, x, k),
                           "counted classification disagrees");
                    ensure(counted.comparisons <= knn_comparison_bound(rep.size(), k),
                           "comparison budget exceeded");
                    ++classifications;
                  }
                }
              }
              counter_rng rng(202611);
              std::uint64_t trees = 0;
              for (int n = 1; n <= 6; ++n) {
                for (int trial = 0; trial < 10; ++trial) {
                  const threshold_spec spec = random_threshold(n, 8, rng);
                  const nn_representation rep = build_threshold(spec);
                  if (rep.size() != 2) {
                    continue;  // constant function: single prototype, no bisector
                  }
                  const linear_decision_tree tree = bisector_tree(rep);
                  ensure(ldt_check(make_threshold(spec), tree).equal,
                         "bisector tree disagrees with its threshold function");
                  ++trees;
                }
              }
              ensure(trees > 0, "no two-prototype threshold representations sampled");
              return std::to_string(classifications) + " counted classifications; " +
                     std::to_string(trees) + " bisector trees checked exhaustively";
            });

  criterion(11, "the largest monochromatic inner-product rectangle has area 2^n",
            [] {
              for (int n = 1; n <= 3; ++n) {
                const rectangle_result r = max_mono_rectangle(n);
                ensure(r.area == (1u << n),
                       "area " + std::to_string(r.area) + " at n=" + std::to_string(n));
                std::uint64_t cells = 0;
                for (std::uint32_t i = 0; i < (1u << n); ++i) {
                  if (!((r.rows >> i) & 1u)) {
                    continue;
                  }
                  for (std::uint32_t j = 0; j < (1u << n); ++j) {
                    if (!((r.cols >> j) & 1u)) {
                      continue;
                    }
                    ensure((std::popcount(i & j) & 1) == r.value,
                           "returned rectangle is not monochromatic");
                    ++cells;
                  }
                }
                ensure(cells == r.area, "reported area disagrees with the masks");
              }
              return "areas 2, 4, 8 for n = 1, 2, 3";
            });

  criterion(12, "seeded commands reproduce byte-identical output files",
            [&cli] {
              ensure(!cli.empty(), "path to the command-line binary required as argv[1]");
              const auto run = [&cli](const std::string& args) {
                const std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
                ensure(std::system(cmd.c_str()) == 0, "command failed: " + cmd);
              };
              const std::string base = "/tmp/nnrep_acceptance_";
              run("experiment --kind random-bnn --arity 2 --samples 5 --seed 7 --csv-out " +
                  base + "e1.csv --json-out " + base + "e1.json");
              run("experiment --kind random-bnn --arity 2 --samples 5 --seed 7 --csv-out " +
                  base + "e2.csv --json-out " + base + "e2.json");
              ensure(!slurp(base + "e1.csv").empty(), "empty experiment output");
              ensure(slurp(base + "e1.csv") == slurp(base + "e2.csv"),
                     "experiment CSV differs between runs");
              ensure(slurp(base + "e1.json") == slurp(base + "e2.json"),
                     "experiment JSON differs between runs");
              run("construct --function maj:3 --method covering --out " + base + "c1.json");
              run("construct --function maj:3 --method covering --out " + base + "c2.json");
              ensure(slurp(base + "c1.json") == slurp(base + "c2.json"),
                     "construction output differs between runs");
              run("minimize --function th:2:2 --model bnn --witness-out " + base + "w1.json");
              run("minimize --function th:2:2 --model bnn --witness-out " + base + "w2.json");
              ensure(slurp(base + "w1.json") == slurp(base + "w2.json"),
                     "minimization witness differs between runs");
              return std::string("experiment, construct, and minimize outputs byte-stable");
            });

  if (failures == 0) {
    std::cout << "all 12 checks passed" << std::endl;
  } else {
    std::cout << failures << " check(s) failed" << std::endl;
  }
  return failures;
}
