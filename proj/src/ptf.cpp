#include "nnrep/ptf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

// Largest exponent eval_sign will materialize (bits of the shifted value).
constexpr std::uint64_t max_eval_exponent = std::uint64_t{1} << 31;

std::uint64_t checked_exponent(const rational& value, const char* what) {
  if (denominator(value) != 1) {
    throw compile_error(std::string(what) + " is not an integer: " + format_rational(value));
  }
  const bigint num = numerator(value);
  if (num < 0) {
    throw compile_error(std::string(what) + " is negative: " + format_rational(value));
  }
  if (num > std::numeric_limits<std::uint64_t>::max()) {
    throw compile_error(std::string(what) + " exceeds the unsigned 64-bit range");
  }
  return num.convert_to<std::uint64_t>();
}

std::uint64_t isqrt_u64(std::uint64_t v) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) {
    --r;
  }
  while ((r + 1) * (r + 1) <= v) {
    ++r;
  }
  return r;
}

}  // namespace

void validate_polynomial(const sign_polynomial& poly) {
  if (poly.dimension < 1 || poly.dimension > boolean_function::max_arity) {
    throw invalid_argument("polynomial dimension must be between 1 and 24, got " +
                           std::to_string(poly.dimension));
  }
  for (const monomial_term& term : poly.terms) {
    if (term.sign != 1 && term.sign != -1) {
      throw invalid_argument("monomial sign must be +1 or -1, got " + std::to_string(term.sign));
    }
    if (static_cast<int>(term.exponents.size()) != poly.dimension) {
      throw invalid_argument("monomial has " + std::to_string(term.exponents.size()) +
                             " exponents for dimension " + std::to_string(poly.dimension));
    }
  }
}

compiled_ptf compile_ptf(const boolean_function& f, const nn_representation& rep) {
  const int n = f.arity();
  if (rep.dimension() != n) {
    throw dimension_mismatch("representation dimension " + std::to_string(rep.dimension()) +
                             " does not match function arity " + std::to_string(n));
  }
  if (!satisfies_nn(f, rep)) {
    throw compile_error("representation does not compute the target function");
  }

  std::vector<const rational_point*> prototypes;
  prototypes.reserve(rep.size());
  for (const rational_point& u : rep.positives()) {
    prototypes.push_back(&u);
  }
  for (const rational_point& u : rep.negatives()) {
    prototypes.push_back(&u);
  }

  // Per prototype u the squared distance from a Boolean x is
  //   |u|^2 + sum_i (1 - 2 u_i) x_i.
  // Adding B * (1 + sum_i x_i) with B at least every |u|^2 and every
  // (1 - 2 u_i) yields a linear form with nonnegative coefficients whose
  // ordering over prototypes is the reverse distance ordering.
  std::vector<rational> norms;
  norms.reserve(prototypes.size());
  rational max_value = 1;
  for (const rational_point* u : prototypes) {
    rational norm2 = 0;
    for (int i = 0; i < n; ++i) {
      norm2 += (*u)[i] * (*u)[i];
      max_value = std::max(max_value, rational(1 - 2 * (*u)[i]));
    }
    max_value = std::max(max_value, norm2);
    norms.push_back(std::move(norm2));
  }
  const bigint slack_bound = ceil_rational(max_value);  // B

  bigint denom_lcm = 1;  // M
  for (std::size_t j = 0; j < prototypes.size(); ++j) {
    denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(rational(slack_bound - norms[j])));
    for (int i = 0; i < n; ++i) {
      const rational coeff = slack_bound - (1 - 2 * (*prototypes[j])[i]);
      denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(coeff));
    }
  }

  // The scale A clears denominators and guarantees that a strict 1/M lead in
  // the linear form becomes a factor of at least the number of prototypes
  // after exponentiation, so the closest prototype's monomial dominates.
  const unsigned spread = ceil_log2(bigint(prototypes.size()));
  const bigint exponent_scale = bigint(std::max(1u, spread)) * denom_lcm;  // A

  sign_polynomial poly;
  poly.dimension = n;
  poly.terms.reserve(prototypes.size());
  for (std::size_t j = 0; j < prototypes.size(); ++j) {
    monomial_term term;
    term.sign = j < rep.positives().size() ? 1 : -1;
    term.coeff_exp =
        checked_exponent(rational(exponent_scale) * (slack_bound - norms[j]),
                         "constant-term exponent");
    term.exponents.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const rational coeff = slack_bound - (1 - 2 * (*prototypes[j])[i]);
      term.exponents.push_back(
          checked_exponent(rational(exponent_scale) * coeff, "variable exponent"));
    }
    poly.terms.push_back(std::move(term));
  }

  return compiled_ptf{std::move(poly), compiler_params{slack_bound, denom_lcm, exponent_scale}};
}

int eval_sign(const sign_polynomial& poly, const boolean_point& x) {
  if (x.dimension != poly.dimension) {
    throw dimension_mismatch("point of dimension " + std::to_string(x.dimension) +
                             " for a polynomial of dimension " + std::to_string(poly.dimension));
  }
  bigint total = 0;
  for (const monomial_term& term : poly.terms) {
    if (static_cast<int>(term.exponents.size()) != poly.dimension) {
      throw invalid_argument("monomial exponent count does not match polynomial dimension");
    }
    bigint e = term.coeff_exp;
    for (int i = 0; i < poly.dimension; ++i) {
      if (x.bit(i)) {
        e += term.exponents[static_cast<std::size_t>(i)];
      }
    }
    if (e > max_eval_exponent) {
      throw compile_error("monomial exponent too large to evaluate exactly");
    }
    const bigint value = bigint(1) << e.convert_to<unsigned>();
    if (term.sign > 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total.sign();
}

ptf_report verify_ptf(const boolean_function& f, const sign_polynomial& poly) {
  if (f.arity() != poly.dimension) {
    throw dimension_mismatch("function arity " + std::to_string(f.arity()) +
                             " does not match polynomial dimension " +
                             std::to_string(poly.dimension));
  }
  ptf_report report;
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    const bool positive = eval_sign(poly, make_boolean_point(a, poly.dimension)) >= 0;
    if (positive != f.value(a)) {
      report.counterexamples.push_back(a);
    }
  }
  report.ok = report.counterexamples.empty();
  return report;
}

bool check_margin(const boolean_function& f, const sign_polynomial& poly) {
  if (f.arity() != poly.dimension) {
    throw dimension_mismatch("function arity " + std::to_string(f.arity()) +
                             " does not match polynomial dimension " +
                             std::to_string(poly.dimension));
  }
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    const boolean_point x = make_boolean_point(a, poly.dimension);
    const bool want_positive = f.value(a);
    bigint lead = 0;        // largest monomial magnitude on the agreeing side
    bigint opposing = 0;    // total magnitude of the other side
    for (const monomial_term& term : poly.terms) {
      bigint e = term.coeff_exp;
      for (int i = 0; i < poly.dimension; ++i) {
        if (x.bit(i)) {
          e += term.exponents[static_cast<std::size_t>(i)];
        }
      }
      if (e > max_eval_exponent) {
        throw compile_error("monomial exponent too large to evaluate exactly");
      }
      const bigint value = bigint(1) << e.convert_to<unsigned>();
      if ((term.sign > 0) == want_positive) {
        lead = std::max(lead, value);
      } else {
        opposing += value;
      }
    }
    if (!(lead > opposing)) {
      return false;
    }
  }
  return true;
}

std::size_t term_count_lower_bound(const function_spec& spec) {
  switch (spec.kind) {
    case function_spec::family::parity:
      return static_cast<std::size_t>(spec.arity) + 1;
    case function_spec::family::inner_product: {
      const int h = spec.ip_half;
      if (h % 2 == 0) {
        return std::size_t{1} << (h / 2);
      }
      return static_cast<std::size_t>(isqrt_u64(std::uint64_t{1} << h)) + 1;
    }
    default:
      return 1;
  }
}

term_count_record term_count_report(const function_spec& spec, const sign_polynomial& poly) {
  if (spec.arity != poly.dimension) {
    throw dimension_mismatch("function arity " + std::to_string(spec.arity) +
                             " does not match polynomial dimension " +
                             std::to_string(poly.dimension));
  }
  term_count_record record;
  record.function_text = spec.text;
  record.term_count = poly.terms.size();
  record.lower_bound = term_count_lower_bound(spec);
  record.meets_bound = record.term_count >= record.lower_bound;
  record.tight = record.term_count == record.lower_bound;
  return record;
}

}  // namespace nnrep
