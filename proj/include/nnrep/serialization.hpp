#pragma once

#include <string>
#include <string_view>

#include "nnrep/ldt.hpp"
#include "nnrep/minimize.hpp"
#include "nnrep/ptf.hpp"
#include "nnrep/representation.hpp"

namespace nnrep {

// All emitters return compact JSON with stable key order and no trailing
// newline; callers writing files append one. All parsers reject structural
// problems with parse_error and re-validate semantic invariants through the
// usual constructors, so their exceptions pass through unchanged.

// {"n":2,"positives":[["1","1"]],"negatives":[["0","0"],["1/2","0"]]}
// Coordinates are exact rational strings; integers are also accepted on
// input, floating-point numbers are not.
std::string representation_to_json(const nn_representation& rep);
nn_representation representation_from_json(std::string_view text);

// {"n":1,"terms":[{"sign":1,"c":3,"e":[20]},{"sign":-1,"c":11,"e":[4]}]}
// c is the power-of-two coefficient exponent, e the per-variable exponents.
std::string polynomial_to_json(const sign_polynomial& poly);
sign_polynomial polynomial_from_json(std::string_view text);

// {"B":3,"M":4,"A":4}; values render as JSON integers when they fit 64 bits
// and as decimal strings beyond that.
std::string params_to_json(const compiler_params& params);

// {"test":{"w":["2","-2"],"t":"1/2"},"le":{"leaf":0},"gt":{"leaf":1}}
std::string ldt_to_json(const linear_decision_tree& tree);
linear_decision_tree ldt_from_json(std::string_view text);

// {"ok":false,"counterexamples":[{"point":6,"bits":"011","expected":0,
//  "observed":1}],"ties":[{"point":3,"bits":"110"}]}
std::string report_to_json(const verification_report& report, int dimension);
// Line-oriented rendering of the same content.
std::string report_to_text(const verification_report& report, int dimension);

// {"function":"maj:4","model":"bnn","k":1,"optimum":4,"explored":1087,
//  "exhausted_up_to":3,"witness":{...}}; optimum/witness are null when the
//  search ran out of budget. Never includes wall-clock time.
std::string minimize_summary_json(const std::string& function_text, const std::string& model,
                                  int k, const search_result& result);

// {"function":"ip:1","terms":2,"bound":2,"meets":true,"tight":true}
std::string term_count_to_json(const term_count_record& record);

// {"n":2,"area":4,"rows":1,"cols":15,"value":0}
std::string rectangle_to_json(const rectangle_result& rect);

}  // namespace nnrep
