#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nnrep/boolean_function.hpp"
#include "nnrep/points.hpp"
#include "nnrep/rational.hpp"
#include "nnrep/representation.hpp"

namespace nnrep {

// One signed monomial  sign * 2^coeff_exp * prod_i y_i^exponents[i]  over the
// transformed variables y_i = 2^{x_i}, so on a Boolean input the monomial's
// magnitude is the single power 2^(coeff_exp + sum of exponents over set bits).
struct monomial_term {
  int sign = 1;  // +1 or -1
  std::uint64_t coeff_exp = 0;
  std::vector<std::uint64_t> exponents;
};

// A polynomial whose sign on Boolean inputs (after the y_i = 2^{x_i}
// substitution) reproduces a classification: nonnegative means positive.
struct sign_polynomial {
  int dimension = 0;
  std::vector<monomial_term> terms;
};

// Parameters chosen by the compiler. All three are positive integers:
//  - slack_bound makes every linear-form coefficient nonnegative,
//  - denom_lcm clears all coefficient denominators,
//  - exponent_scale = max(1, ceil(log2(#prototypes))) * denom_lcm gives the
//    closest prototype's monomial enough of a lead to dominate the rest.
struct compiler_params {
  bigint slack_bound;     // B
  bigint denom_lcm;       // M
  bigint exponent_scale;  // A
};

struct compiled_ptf {
  sign_polynomial poly;
  compiler_params params;
};

// Checks structural well-formedness: dimension in range, each sign +1/-1,
// exponent vectors of matching length. Throws invalid_argument otherwise.
void validate_polynomial(const sign_polynomial& poly);

// Compiles a verified nearest-neighbor representation of f into a polynomial
// whose sign matches f on every Boolean input. One monomial per prototype,
// positive prototypes first (in stored order), then negative ones. Throws
// compile_error if the representation does not compute f or if an exponent
// falls outside the unsigned 64-bit range.
compiled_ptf compile_ptf(const boolean_function& f, const nn_representation& rep);

// Exact sign of the polynomial at a Boolean input: -1, 0, or +1. The
// classification convention treats 0 as positive.
int eval_sign(const sign_polynomial& poly, const boolean_point& x);

struct ptf_report {
  bool ok = false;
  std::vector<std::uint32_t> counterexamples;  // inputs where sign disagrees
};

// Checks (eval_sign >= 0) == f on all 2^n inputs, ascending.
ptf_report verify_ptf(const boolean_function& f, const sign_polynomial& poly);

// Diagnostic strengthening of sign agreement: at every input the largest
// monomial on the agreeing side alone outweighs the entire opposing side.
// Holds by construction for compiled polynomials.
bool check_margin(const boolean_function& f, const sign_polynomial& poly);

struct term_count_record {
  std::string function_text;
  std::size_t term_count = 0;
  std::size_t lower_bound = 0;
  bool meets_bound = false;  // term_count >= lower_bound
  bool tight = false;        // term_count == lower_bound
};

// Smallest number of monomials any sign-representation of the function can
// have: n+1 for an n-variable parity, ceil(2^(h/2)) for an inner product on
// two h-bit halves, and the trivial 1 otherwise.
std::size_t term_count_lower_bound(const function_spec& spec);

// Compares a polynomial's term count against the lower bound for the
// function it is claimed to compute.
term_count_record term_count_report(const function_spec& spec, const sign_polynomial& poly);

}  // namespace nnrep
