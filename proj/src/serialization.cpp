#include "nnrep/serialization.hpp"

#include <json.hpp>

#include <limits>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw parse_error(std::string("malformed JSON in ") + what);
  }
  return j;
}

rational coordinate_from_json(const json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return rational(bigint(j.get<std::int64_t>()));
  }
  throw parse_error("coordinates must be rational strings or integers");
}

ordered_json point_to_json(const rational_point& p) {
  ordered_json coords = ordered_json::array();
  for (const rational& c : p.coords()) {
    coords.push_back(format_rational(c));
  }
  return coords;
}

std::vector<rational_point> side_from_json(const json& j, const char* side) {
  if (!j.is_array()) {
    throw parse_error(std::string(side) + " must be an array of points");
  }
  std::vector<rational_point> points;
  points.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_array()) {
      throw parse_error("a point must be an array of coordinates");
    }
    std::vector<rational> coords;
    coords.reserve(entry.size());
    for (const json& c : entry) {
      coords.push_back(coordinate_from_json(c));
    }
    points.emplace_back(std::move(coords));
  }
  return points;
}

// Renders a nonnegative bigint as a JSON integer when it fits, else as a
// decimal string.
ordered_json big_to_json(const bigint& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

ordered_json ldt_node_to_json(const linear_decision_tree& tree, int index) {
  const ldt_node& node = tree.nodes[static_cast<std::size_t>(index)];
  ordered_json j;
  if (node.leaf) {
    j["leaf"] = *node.leaf;
    return j;
  }
  ordered_json test;
  ordered_json weights = ordered_json::array();
  for (const rational& w : node.weights) {
    weights.push_back(format_rational(w));
  }
  test["w"] = std::move(weights);
  test["t"] = format_rational(node.threshold);
  j["test"] = std::move(test);
  j["le"] = ldt_node_to_json(tree, node.le);
  j["gt"] = ldt_node_to_json(tree, node.gt);
  return j;
}

int ldt_node_from_json(const json& j, linear_decision_tree& tree) {
  if (!j.is_object()) {
    throw parse_error("a tree node must be an object");
  }
  const int index = static_cast<int>(tree.nodes.size());
  tree.nodes.emplace_back();
  if (j.contains("leaf")) {
    if (!j.at("leaf").is_number_integer()) {
      throw parse_error("leaf value must be an integer");
    }
    tree.nodes[static_cast<std::size_t>(index)].leaf = j.at("leaf").get<int>();
    return index;
  }
  if (!j.contains("test") || !j.contains("le") || !j.contains("gt")) {
    throw parse_error("a tree node needs either a leaf or test/le/gt");
  }
  const json& test = j.at("test");
  if (!test.is_object() || !test.contains("w") || !test.contains("t") ||
      !test.at("w").is_array()) {
    throw parse_error("a test needs a weight array w and a threshold t");
  }
  ldt_node node;
  node.weights.reserve(test.at("w").size());
  for (const json& w : test.at("w")) {
    node.weights.push_back(coordinate_from_json(w));
  }
  node.threshold = coordinate_from_json(test.at("t"));
  node.le = ldt_node_from_json(j.at("le"), tree);
  node.gt = ldt_node_from_json(j.at("gt"), tree);
  tree.nodes[static_cast<std::size_t>(index)] = std::move(node);
  return index;
}

ordered_json report_points_json(const verification_report& report, int dimension) {
  ordered_json j;
  j["ok"] = report.ok;
  ordered_json mismatches = ordered_json::array();
  for (const counterexample& c : report.counterexamples) {
    ordered_json entry;
    entry["point"] = c.point;
    entry["bits"] = bits_string(c.point, dimension);
    entry["expected"] = c.expected == label::positive ? 1 : 0;
    entry["observed"] = c.observed == label::positive ? 1 : 0;
    mismatches.push_back(std::move(entry));
  }
  j["counterexamples"] = std::move(mismatches);
  ordered_json ties = ordered_json::array();
  for (const std::uint32_t t : report.tie_points) {
    ordered_json entry;
    entry["point"] = t;
    entry["bits"] = bits_string(t, dimension);
    ties.push_back(std::move(entry));
  }
  j["ties"] = std::move(ties);
  return j;
}

}  // namespace

std::string representation_to_json(const nn_representation& rep) {
  ordered_json j;
  j["n"] = rep.dimension();
  ordered_json positives = ordered_json::array();
  for (const rational_point& p : rep.positives()) {
    positives.push_back(point_to_json(p));
  }
  j["positives"] = std::move(positives);
  ordered_json negatives = ordered_json::array();
  for (const rational_point& p : rep.negatives()) {
    negatives.push_back(point_to_json(p));
  }
  j["negatives"] = std::move(negatives);
  return j.dump();
}

nn_representation representation_from_json(std::string_view text) {
  const json j = parse_json(text, "representation");
  if (!j.is_object() || !j.contains("n") || !j.contains("positives") ||
      !j.contains("negatives")) {
    throw parse_error("a representation needs n, positives, and negatives");
  }
  if (!j.at("n").is_number_integer()) {
    throw parse_error("n must be an integer");
  }
  const int n = j.at("n").get<int>();
  return nn_representation(n, side_from_json(j.at("positives"), "positives"),
                           side_from_json(j.at("negatives"), "negatives"));
}

std::string polynomial_to_json(const sign_polynomial& poly) {
  ordered_json j;
  j["n"] = poly.dimension;
  ordered_json terms = ordered_json::array();
  for (const monomial_term& term : poly.terms) {
    ordered_json t;
    t["sign"] = term.sign;
    t["c"] = term.coeff_exp;
    t["e"] = term.exponents;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

sign_polynomial polynomial_from_json(std::string_view text) {
  const json j = parse_json(text, "polynomial");
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") ||
      !j.at("n").is_number_integer() || !j.at("terms").is_array()) {
    throw parse_error("a polynomial needs an integer n and a terms array");
  }
  sign_polynomial poly;
  poly.dimension = j.at("n").get<int>();
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("sign") || !t.contains("c") || !t.contains("e") ||
        !t.at("sign").is_number_integer() || !t.at("c").is_number_unsigned() ||
        !t.at("e").is_array()) {
      throw parse_error("a term needs an integer sign, an unsigned c, and an array e");
    }
    monomial_term term;
    term.sign = t.at("sign").get<int>();
    term.coeff_exp = t.at("c").get<std::uint64_t>();
    for (const json& e : t.at("e")) {
      if (!e.is_number_unsigned()) {
        throw parse_error("exponents must be unsigned integers");
      }
      term.exponents.push_back(e.get<std::uint64_t>());
    }
    poly.terms.push_back(std::move(term));
  }
  validate_polynomial(poly);
  return poly;
}

std::string params_to_json(const compiler_params& params) {
  ordered_json j;
  j["B"] = big_to_json(params.slack_bound);
  j["M"] = big_to_json(params.denom_lcm);
  j["A"] = big_to_json(params.exponent_scale);
  return j.dump();
}

std::string ldt_to_json(const linear_decision_tree& tree) {
  validate_tree(tree);
  return ldt_node_to_json(tree, 0).dump();
}

linear_decision_tree ldt_from_json(std::string_view text) {
  const json j = parse_json(text, "decision tree");
  linear_decision_tree tree;
  ldt_node_from_json(j, tree);
  validate_tree(tree);
  return tree;
}

std::string report_to_json(const verification_report& report, int dimension) {
  return report_points_json(report, dimension).dump();
}

std::string report_to_text(const verification_report& report, int dimension) {
  if (report.ok) {
    return "ok";
  }
  std::string out;
  for (const counterexample& c : report.counterexamples) {
    out += "mismatch at " + bits_string(c.point, dimension) + " (index " +
           std::to_string(c.point) + "): expected " +
           (c.expected == label::positive ? "1" : "0") + ", observed " +
           (c.observed == label::positive ? "1" : "0") + "\n";
  }
  for (const std::uint32_t t : report.tie_points) {
    out += "tie at " + bits_string(t, dimension) + " (index " + std::to_string(t) + ")\n";
  }
  if (!out.empty()) {
    out.pop_back();  // drop the trailing newline; file writers add their own
  }
  return out;
}

std::string minimize_summary_json(const std::string& function_text, const std::string& model,
                                  int k, const search_result& result) {
  ordered_json j;
  j["function"] = function_text;
  j["model"] = model;
  j["k"] = k;
  if (result.optimum) {
    j["optimum"] = *result.optimum;
  } else {
    j["optimum"] = nullptr;
  }
  j["explored"] = result.explored;
  j["exhausted_up_to"] = result.exhausted_up_to;
  if (result.witness) {
    j["witness"] = ordered_json::parse(representation_to_json(*result.witness));
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

std::string term_count_to_json(const term_count_record& record) {
  ordered_json j;
  j["function"] = record.function_text;
  j["terms"] = record.term_count;
  j["bound"] = record.lower_bound;
  j["meets"] = record.meets_bound;
  j["tight"] = record.tight;
  return j.dump();
}

std::string rectangle_to_json(const rectangle_result& rect) {
  ordered_json j;
  j["n"] = rect.n;
  j["area"] = rect.area;
  j["rows"] = rect.rows;
  j["cols"] = rect.cols;
  j["value"] = rect.value;
  return j.dump();
}

}  // namespace nnrep
