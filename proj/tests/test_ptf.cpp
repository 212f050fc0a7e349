#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/constructions.hpp"
#include "nnrep/errors.hpp"
#include "nnrep/points.hpp"
#include "nnrep/prng.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/representation.hpp"
#include "nnrep/serialization.hpp"

using namespace nnrep;

namespace {

void check_compiles_faithfully(const boolean_function& f, const nn_representation& rep) {
  const compiled_ptf compiled = compile_ptf(f, rep);
  CHECK(compiled.poly.terms.size() == rep.size());
  CHECK(verify_ptf(f, compiled.poly).ok);
  CHECK(check_margin(f, compiled.poly));
}

}  // namespace

TEST_CASE("golden single-variable compilation is byte exact") {
  const function_spec spec = parse_function_spec("th:1:1");
  const boolean_function f = realize(spec);  // f(x) = x1
  const nn_representation rep = build_threshold(*spec.threshold);
  REQUIRE(rep.positives()[0] == rational_point({rational(3, 2)}));
  REQUIRE(rep.negatives()[0] == rational_point({rational(-1, 2)}));

  const compiled_ptf compiled = compile_ptf(f, rep);
  CHECK(polynomial_to_json(compiled.poly) ==
        "{\"n\":1,\"terms\":[{\"sign\":1,\"c\":3,\"e\":[20]},{\"sign\":-1,\"c\":11,\"e\":[4]}]}");
  CHECK(params_to_json(compiled.params) == "{\"B\":3,\"M\":4,\"A\":4}");
  CHECK(compiled.params.slack_bound == 3);
  CHECK(compiled.params.denom_lcm == 4);
  CHECK(compiled.params.exponent_scale == 4);

  // 2^3 - 2^11 = -2040 at the origin; 2^23 - 2^15 > 0 at x = 1.
  CHECK(eval_sign(compiled.poly, make_boolean_point(0, 1)) == -1);
  CHECK(eval_sign(compiled.poly, make_boolean_point(1, 1)) == 1);
  CHECK(verify_ptf(f, compiled.poly).ok);
  CHECK(check_margin(f, compiled.poly));
}

TEST_CASE("compilation refuses a representation of the wrong function") {
  const boolean_function parity2 = parse_function("parity:2");
  const nn_representation rep = build_majority_bnn(2);
  CHECK_THROWS_AS(compile_ptf(parity2, rep), compile_error);
  CHECK_THROWS_AS(compile_ptf(parse_function("parity:3"), rep), dimension_mismatch);
}

TEST_CASE("every diagonal representation compiles at small arity") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t masks = std::uint32_t{1} << (n + 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      std::vector<int> levels;
      for (int l = 0; l <= n; ++l) {
        if ((mask >> l) & 1u) {
          levels.push_back(l);
        }
      }
      const symmetric_spec spec = symmetric_spec::make(n, levels);
      check_compiles_faithfully(make_symmetric(spec), build_symmetric(spec));
    }
  }
}

TEST_CASE("threshold, majority, parity and covering outputs compile") {
  for (const char* text : {"th:2:2", "th:3:1:1,-2,3", "th:4:2:1,1,2,-1", "th:2:0:0,0"}) {
    const function_spec spec = parse_function_spec(text);
    check_compiles_faithfully(realize(spec), build_threshold(*spec.threshold));
  }
  for (int n = 1; n <= 4; ++n) {
    check_compiles_faithfully(parse_function("maj:" + std::to_string(n)),
                              build_majority_bnn(n));
    check_compiles_faithfully(parse_function("parity:" + std::to_string(n)),
                              build_parity_bnn(n));
  }
  counter_rng rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const boolean_function f = random_function(n, rng);
      check_compiles_faithfully(f, build_covering(f));
    }
  }
}

TEST_CASE("compiled term order is positives then negatives") {
  const boolean_function f = parse_function("parity:2");
  const nn_representation rep = build_parity_bnn(2);
  const compiled_ptf compiled = compile_ptf(f, rep);
  REQUIRE(compiled.poly.terms.size() == 4);
  CHECK(compiled.poly.terms[0].sign == 1);
  CHECK(compiled.poly.terms[1].sign == 1);
  CHECK(compiled.poly.terms[2].sign == -1);
  CHECK(compiled.poly.terms[3].sign == -1);
}

TEST_CASE("zero total is classified as positive") {
  sign_polynomial poly;
  poly.dimension = 1;
  poly.terms.push_back({1, 0, {0}});
  poly.terms.push_back({-1, 0, {0}});
  validate_polynomial(poly);
  CHECK(eval_sign(poly, make_boolean_point(0, 1)) == 0);
  boolean_function ones(1);
  ones.set_value(0, true);
  ones.set_value(1, true);
  CHECK(verify_ptf(ones, poly).ok);
}

TEST_CASE("verification lists disagreeing inputs in ascending order") {
  sign_polynomial poly;  // constantly +1
  poly.dimension = 2;
  poly.terms.push_back({1, 0, {0, 0}});
  const boolean_function f = parse_function("th:2:2");
  const ptf_report report = verify_ptf(f, poly);
  CHECK_FALSE(report.ok);
  CHECK(report.counterexamples == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("margin can hold or fail independently of correctness") {
  // Two positive terms only jointly outweigh the negative one: the sign is
  // right at every input, but the largest agreeing monomial alone merely
  // matches the opposing side, so strict dominance fails.
  sign_polynomial poly;
  poly.dimension = 1;
  poly.terms.push_back({1, 2, {0}});   // +4
  poly.terms.push_back({1, 2, {0}});   // +4
  poly.terms.push_back({-1, 2, {0}});  // -4
  boolean_function ones(1);
  ones.set_value(0, true);
  ones.set_value(1, true);
  CHECK(verify_ptf(ones, poly).ok);
  CHECK_FALSE(check_margin(ones, poly));
}

TEST_CASE("polynomial validation") {
  sign_polynomial poly;
  poly.dimension = 0;
  CHECK_THROWS_AS(validate_polynomial(poly), invalid_argument);
  poly.dimension = 25;
  CHECK_THROWS_AS(validate_polynomial(poly), invalid_argument);
  poly.dimension = 2;
  poly.terms.push_back({0, 0, {0, 0}});
  CHECK_THROWS_AS(validate_polynomial(poly), invalid_argument);
  poly.terms[0].sign = 1;
  poly.terms[0].exponents = {0};
  CHECK_THROWS_AS(validate_polynomial(poly), invalid_argument);
  poly.terms[0].exponents = {0, 0};
  CHECK_NOTHROW(validate_polynomial(poly));
}

TEST_CASE("oversized exponents are rejected at evaluation") {
  sign_polynomial poly;
  poly.dimension = 1;
  poly.terms.push_back({1, std::uint64_t{1} << 40, {0}});
  validate_polynomial(poly);
  CHECK_THROWS_AS(eval_sign(poly, make_boolean_point(0, 1)), compile_error);
}

TEST_CASE("evaluation checks the point dimension") {
  sign_polynomial poly;
  poly.dimension = 2;
  poly.terms.push_back({1, 0, {0, 0}});
  CHECK_THROWS_AS(eval_sign(poly, make_boolean_point(0, 1)), dimension_mismatch);
}

TEST_CASE("term-count floors") {
  CHECK(term_count_lower_bound(parse_function_spec("parity:3")) == 4);
  CHECK(term_count_lower_bound(parse_function_spec("parity:1")) == 2);
  CHECK(term_count_lower_bound(parse_function_spec("ip:1")) == 2);   // ceil(2^(1/2))
  CHECK(term_count_lower_bound(parse_function_spec("ip:2")) == 2);   // 2^(2/2)
  CHECK(term_count_lower_bound(parse_function_spec("ip:3")) == 3);   // ceil(2^(3/2))
  CHECK(term_count_lower_bound(parse_function_spec("ip:4")) == 4);
  CHECK(term_count_lower_bound(parse_function_spec("maj:3")) == 1);
  CHECK(term_count_lower_bound(parse_function_spec("table:2:8")) == 1);
}

TEST_CASE("diagonal parity compilation is tight against its floor") {
  for (int n = 1; n <= 4; ++n) {
    const function_spec spec = parse_function_spec("parity:" + std::to_string(n));
    std::vector<int> odd_levels;
    for (int l = 1; l <= n; l += 2) {
      odd_levels.push_back(l);
    }
    const compiled_ptf compiled =
        compile_ptf(realize(spec), build_symmetric(symmetric_spec::make(n, odd_levels)));
    const term_count_record record = term_count_report(spec, compiled.poly);
    CHECK(record.term_count == static_cast<std::size_t>(n) + 1);
    CHECK(record.lower_bound == static_cast<std::size_t>(n) + 1);
    CHECK(record.meets_bound);
    CHECK(record.tight);
  }
}

TEST_CASE("single-pair inner product compiles tightly through its threshold form") {
  const function_spec ip = parse_function_spec("ip:1");
  const function_spec th = parse_function_spec("th:2:2");
  REQUIRE(realize(ip).table_hex() == realize(th).table_hex());
  const compiled_ptf compiled = compile_ptf(realize(ip), build_threshold(*th.threshold));
  const term_count_record record = term_count_report(ip, compiled.poly);
  CHECK(record.term_count == 2);
  CHECK(record.lower_bound == 2);
  CHECK(record.tight);
}

TEST_CASE("term-count report checks dimensions") {
  sign_polynomial poly;
  poly.dimension = 1;
  poly.terms.push_back({1, 0, {0}});
  CHECK_THROWS_AS(term_count_report(parse_function_spec("parity:2"), poly), dimension_mismatch);
}
