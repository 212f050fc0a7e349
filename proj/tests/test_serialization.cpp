#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "nnrep/boolean_function.hpp"
#include "nnrep/constructions.hpp"
#include "nnrep/errors.hpp"
#include "nnrep/ldt.hpp"
#include "nnrep/minimize.hpp"
#include "nnrep/points.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/representation.hpp"
#include "nnrep/serialization.hpp"

using namespace nnrep;

TEST_CASE("representation rendering is compact and canonical") {
  const nn_representation rep = build_majority_bnn(3);
  CHECK(representation_to_json(rep) ==
        "{\"n\":3,\"positives\":[[\"1\",\"1\",\"1\"]],\"negatives\":[[\"0\",\"0\",\"0\"]]}");
}

TEST_CASE("representation round trip preserves every coordinate") {
  const nn_representation rep =
      build_symmetric(symmetric_spec::make(3, {1, 3}));
  const nn_representation back = representation_from_json(representation_to_json(rep));
  CHECK(back.dimension() == rep.dimension());
  CHECK(back.positives() == rep.positives());
  CHECK(back.negatives() == rep.negatives());
}

TEST_CASE("coordinates accept integers and non-canonical fractions") {
  const nn_representation rep = representation_from_json(
      "{\"n\":2,\"positives\":[[1,1]],\"negatives\":[[\"4/6\",\"0\"]]}");
  CHECK(rep.positives()[0] == rational_point({rational(1), rational(1)}));
  CHECK(rep.negatives()[0] == rational_point({rational(2, 3), rational(0)}));
  CHECK(representation_to_json(rep) ==
        "{\"n\":2,\"positives\":[[\"1\",\"1\"]],\"negatives\":[[\"2/3\",\"0\"]]}");
}

TEST_CASE("floating-point coordinates are rejected") {
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":1,\"positives\":[[1.5]],\"negatives\":[]}"),
      parse_error);
}

TEST_CASE("malformed representation documents") {
  CHECK_THROWS_AS(representation_from_json("not json"), parse_error);
  CHECK_THROWS_AS(representation_from_json("{}"), parse_error);
  CHECK_THROWS_AS(representation_from_json("{\"n\":1,\"positives\":[]}"), parse_error);
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":\"1\",\"positives\":[],\"negatives\":[]}"),
      parse_error);
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":1,\"positives\":7,\"negatives\":[]}"), parse_error);
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":1,\"positives\":[[\"x\"]],\"negatives\":[]}"),
      parse_error);
}

TEST_CASE("parsed representations re-validate the set invariants") {
  CHECK_THROWS_AS(
      representation_from_json(
          "{\"n\":1,\"positives\":[[\"0\"]],\"negatives\":[[\"0\"]]}"),
      invalid_representation);
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":0,\"positives\":[],\"negatives\":[]}"),
      arity_out_of_range);
  CHECK_THROWS_AS(
      representation_from_json("{\"n\":2,\"positives\":[[\"1\"]],\"negatives\":[]}"),
      dimension_mismatch);
}

TEST_CASE("polynomial round trip and golden form") {
  const std::string golden =
      "{\"n\":1,\"terms\":[{\"sign\":1,\"c\":3,\"e\":[20]},{\"sign\":-1,\"c\":11,\"e\":[4]}]}";
  const sign_polynomial poly = polynomial_from_json(golden);
  CHECK(poly.dimension == 1);
  REQUIRE(poly.terms.size() == 2);
  CHECK(poly.terms[0].sign == 1);
  CHECK(poly.terms[0].coeff_exp == 3);
  CHECK(poly.terms[0].exponents == std::vector<std::uint64_t>{20});
  CHECK(poly.terms[1].sign == -1);
  CHECK(polynomial_to_json(poly) == golden);
}

TEST_CASE("polynomial parsing errors") {
  CHECK_THROWS_AS(polynomial_from_json("plainly broken"), parse_error);
  CHECK_THROWS_AS(polynomial_from_json("{\"n\":1}"), parse_error);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":1,\"terms\":[{\"sign\":\"+\",\"c\":0,\"e\":[0]}]}"),
      parse_error);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":1,\"terms\":[{\"sign\":1,\"c\":-1,\"e\":[0]}]}"),
      parse_error);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":1,\"terms\":[{\"sign\":1,\"c\":0,\"e\":0}]}"), parse_error);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":1,\"terms\":[{\"sign\":1,\"c\":0,\"e\":[-2]}]}"),
      parse_error);
  // Structurally sound JSON with a bad sign fails semantic validation.
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":1,\"terms\":[{\"sign\":2,\"c\":0,\"e\":[0]}]}"),
      invalid_argument);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"n\":2,\"terms\":[{\"sign\":1,\"c\":0,\"e\":[0]}]}"),
      invalid_argument);
}

TEST_CASE("compiler parameters render as integers until they outgrow 64 bits") {
  compiler_params params;
  params.slack_bound = 3;
  params.denom_lcm = 4;
  params.exponent_scale = 4;
  CHECK(params_to_json(params) == "{\"B\":3,\"M\":4,\"A\":4}");

  params.exponent_scale = bigint(1) << 70;
  CHECK(params_to_json(params) ==
        "{\"B\":3,\"M\":4,\"A\":\"1180591620717411303424\"}");
}

TEST_CASE("decision tree round trip") {
  const nn_representation rep =
      build_threshold(*parse_function_spec("th:1:1").threshold);
  const linear_decision_tree tree = bisector_tree(rep);
  const std::string golden =
      "{\"test\":{\"w\":[\"4\"],\"t\":\"2\"},\"le\":{\"leaf\":0},\"gt\":{\"leaf\":1}}";
  CHECK(ldt_to_json(tree) == golden);
  const linear_decision_tree back = ldt_from_json(golden);
  CHECK(ldt_to_json(back) == golden);
  CHECK(ldt_depth(back) == 1);
}

TEST_CASE("decision tree parsing errors") {
  CHECK_THROWS_AS(ldt_from_json("nope"), parse_error);
  CHECK_THROWS_AS(ldt_from_json("[]"), parse_error);
  CHECK_THROWS_AS(ldt_from_json("{\"leaf\":\"0\"}"), parse_error);
  CHECK_THROWS_AS(ldt_from_json("{\"test\":{\"w\":[\"1\"],\"t\":\"0\"},\"le\":{\"leaf\":0}}"),
                  parse_error);
  CHECK_THROWS_AS(ldt_from_json("{\"test\":{\"t\":\"0\"},\"le\":{\"leaf\":0},\"gt\":{\"leaf\":1}}"),
                  parse_error);
  // Structure is fine, semantics are not: leaf values must be 0 or 1.
  CHECK_THROWS_AS(ldt_from_json("{\"leaf\":3}"), invalid_argument);
}

TEST_CASE("verification reports in JSON and text") {
  verification_report report;
  report.ok = false;
  report.counterexamples.push_back({6, label::negative, label::positive});
  report.tie_points.push_back(3);
  CHECK(report_to_json(report, 3) ==
        "{\"ok\":false,\"counterexamples\":[{\"point\":6,\"bits\":\"011\",\"expected\":0,"
        "\"observed\":1}],\"ties\":[{\"point\":3,\"bits\":\"110\"}]}");
  CHECK(report_to_text(report, 3) ==
        "mismatch at 011 (index 6): expected 0, observed 1\ntie at 110 (index 3)");

  verification_report fine;
  fine.ok = true;
  CHECK(report_to_json(fine, 2) == "{\"ok\":true,\"counterexamples\":[],\"ties\":[]}");
  CHECK(report_to_text(fine, 2) == "ok");
}

TEST_CASE("search summaries with and without an optimum") {
  const search_result found = exact_bnn(parse_function("th:2:2"));
  CHECK(minimize_summary_json("th:2:2", "bnn", 1, found) ==
        "{\"function\":\"th:2:2\",\"model\":\"bnn\",\"k\":1,\"optimum\":3,\"explored\":14,"
        "\"exhausted_up_to\":2,\"witness\":{\"n\":2,\"positives\":[[\"1\",\"1\"]],"
        "\"negatives\":[[\"1\",\"0\"],[\"0\",\"1\"]]}}");

  search_limits limits;
  limits.max_size = 2;
  const search_result cut = exact_bnn(parse_function("parity:2"), limits);
  CHECK(minimize_summary_json("parity:2", "bnn", 1, cut) ==
        "{\"function\":\"parity:2\",\"model\":\"bnn\",\"k\":1,\"optimum\":null,"
        "\"explored\":10,\"exhausted_up_to\":2,\"witness\":null}");
}

TEST_CASE("term-count records") {
  term_count_record record;
  record.function_text = "ip:1";
  record.term_count = 2;
  record.lower_bound = 2;
  record.meets_bound = true;
  record.tight = true;
  CHECK(term_count_to_json(record) ==
        "{\"function\":\"ip:1\",\"terms\":2,\"bound\":2,\"meets\":true,\"tight\":true}");
}

TEST_CASE("rectangle records") {
  rectangle_result rect;
  rect.n = 2;
  rect.area = 4;
  rect.rows = 1;
  rect.cols = 15;
  rect.value = 0;
  CHECK(rectangle_to_json(rect) == "{\"n\":2,\"area\":4,\"rows\":1,\"cols\":15,\"value\":0}");
}
