#include "nnrep/boolean_function.hpp"

#include <algorithm>
#include <bit>

#include "nnrep/errors.hpp"

namespace nnrep {

namespace {

std::uint64_t words_needed(int arity) {
  return ((std::uint64_t{1} << arity) + 63) / 64;
}

int check_arity(long long n, int upper, const std::string& what) {
  if (n < 1 || n > upper) {
    throw arity_out_of_range(what + " must be between 1 and " + std::to_string(upper) +
                             ", got " + std::to_string(n));
  }
  return static_cast<int>(n);
}

long long parse_plain_int(std::string_view part, std::string_view whole) {
  bool negative = false;
  std::size_t i = 0;
  if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
    negative = part[0] == '-';
    i = 1;
  }
  if (i == part.size() || part.size() > 12) {
    throw parse_error("invalid integer in function spec: '" + std::string(whole) + "'");
  }
  long long value = 0;
  for (; i < part.size(); ++i) {
    if (part[i] < '0' || part[i] > '9') {
      throw parse_error("invalid integer in function spec: '" + std::string(whole) + "'");
    }
    value = value * 10 + (part[i] - '0');
  }
  return negative ? -value : value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

boolean_function::boolean_function(int arity) : arity_(check_arity(arity, max_arity, "arity")) {
  words_.assign(words_needed(arity_), 0);
}

void boolean_function::set_value(std::uint32_t assignment, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (assignment & 63u);
  if (v) {
    words_[assignment >> 6] |= mask;
  } else {
    words_[assignment >> 6] &= ~mask;
  }
}

std::uint64_t boolean_function::count_ones() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::uint64_t>(std::popcount(w));
  }
  return total;
}

std::string boolean_function::table_hex() const {
  static const char digits[] = "0123456789abcdef";
  const std::uint32_t bits = domain_size();
  const std::uint32_t width = std::max<std::uint32_t>(1, (bits + 3) / 4);
  std::string out(width, '0');
  for (std::uint32_t d = 0; d < width; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::uint32_t idx = d * 4 + b;
      if (idx < bits && value(idx)) {
        nibble |= 1u << b;
      }
    }
    out[width - 1 - d] = digits[nibble];
  }
  return out;
}

threshold_spec threshold_spec::from_rationals(const std::vector<rational>& weights,
                                              const rational& threshold) {
  if (weights.empty() || weights.size() > boolean_function::max_arity) {
    throw arity_out_of_range("threshold weight count must be between 1 and 24");
  }
  bigint common = denominator(threshold);
  for (const rational& w : weights) {
    common = boost::multiprecision::lcm(common, denominator(w));
  }
  threshold_spec spec;
  spec.weights.reserve(weights.size());
  for (const rational& w : weights) {
    spec.weights.push_back(numerator(w) * (common / denominator(w)));
  }
  spec.threshold = numerator(threshold) * (common / denominator(threshold));
  return spec;
}

symmetric_spec symmetric_spec::make(int arity, std::vector<int> levels) {
  check_arity(arity, boolean_function::max_arity, "arity");
  for (int l : levels) {
    if (l < 0 || l > arity) {
      throw invalid_argument("symmetric level " + std::to_string(l) + " outside [0, " +
                             std::to_string(arity) + "]");
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return symmetric_spec{arity, std::move(levels)};
}

boolean_function make_parity(int n) {
  boolean_function f(n);
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    f.set_value(a, std::popcount(a) & 1);
  }
  return f;
}

boolean_function make_majority(int n) {
  check_arity(n, boolean_function::max_arity, "arity");
  // popcount(x) >= n/2 over integers is popcount(x) >= ceil(n/2).
  boolean_function f(n);
  const int cut = (n + 1) / 2;
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    f.set_value(a, std::popcount(a) >= cut);
  }
  return f;
}

boolean_function make_threshold(const threshold_spec& spec) {
  const int n = check_arity(spec.arity(), boolean_function::max_arity, "arity");
  boolean_function f(n);
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    bigint total = 0;
    std::uint32_t rest = a;
    while (rest != 0) {
      const int i = std::countr_zero(rest);
      total += spec.weights[static_cast<std::size_t>(i)];
      rest &= rest - 1;
    }
    f.set_value(a, total >= spec.threshold);
  }
  return f;
}

boolean_function make_symmetric(const symmetric_spec& spec) {
  std::uint32_t level_mask = 0;
  for (int l : spec.levels) {
    level_mask |= 1u << l;
  }
  boolean_function f(spec.arity);
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    f.set_value(a, (level_mask >> std::popcount(a)) & 1u);
  }
  return f;
}

boolean_function make_inner_product(int n) {
  check_arity(n, boolean_function::max_arity / 2, "inner product parameter");
  boolean_function f(2 * n);
  const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t a = 0; a < f.domain_size(); ++a) {
    const std::uint32_t x = a & mask;
    const std::uint32_t y = a >> n;
    f.set_value(a, std::popcount(x & y) & 1);
  }
  return f;
}

boolean_function function_from_hex(int arity, std::string_view hex) {
  boolean_function f(arity);
  if (hex.empty()) {
    throw parse_error("empty table hex");
  }
  const std::uint32_t bits = f.domain_size();
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const char c = hex[hex.size() - 1 - d];
    unsigned nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<unsigned>(c - 'a') + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = static_cast<unsigned>(c - 'A') + 10;
    } else {
      throw parse_error("invalid table hex digit '" + std::string(1, c) + "'");
    }
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) {
        continue;
      }
      const std::uint64_t idx = d * 4 + b;
      if (idx >= bits) {
        throw parse_error("table hex has set bits beyond 2^" + std::to_string(arity));
      }
      f.set_value(static_cast<std::uint32_t>(idx), true);
    }
  }
  return f;
}

function_spec parse_function_spec(std::string_view text) {
  const auto parts = split(text, ':');
  const auto fail = [&](const std::string& why) -> void {
    throw parse_error("invalid function spec '" + std::string(text) + "': " + why);
  };

  function_spec spec;
  spec.text = std::string(text);
  const std::string_view head = parts[0];

  const auto arity_token = [&](int upper) -> int {
    if (parts.size() < 2) {
      fail("missing arity");
    }
    return check_arity(parse_plain_int(parts[1], text), upper, "arity");
  };

  if (head == "parity" || head == "maj" || head == "ip") {
    if (parts.size() != 2) {
      fail("expected exactly one parameter");
    }
  }

  if (head == "parity") {
    spec.kind = function_spec::family::parity;
    spec.arity = arity_token(boolean_function::max_arity);
  } else if (head == "maj") {
    spec.kind = function_spec::family::majority;
    spec.arity = arity_token(boolean_function::max_arity);
  } else if (head == "ip") {
    spec.kind = function_spec::family::inner_product;
    spec.ip_half = arity_token(boolean_function::max_arity / 2);
    spec.arity = 2 * spec.ip_half;
  } else if (head == "th") {
    if (parts.size() != 3 && parts.size() != 4) {
      fail("expected th:n:t or th:n:t:w1,...,wn");
    }
    spec.kind = function_spec::family::threshold;
    spec.arity = arity_token(boolean_function::max_arity);
    const rational t = parse_rational(parts[2]);
    std::vector<rational> weights;
    if (parts.size() == 4) {
      for (std::string_view w : split(parts[3], ',')) {
        weights.push_back(parse_rational(w));
      }
      if (static_cast<int>(weights.size()) != spec.arity) {
        fail("expected " + std::to_string(spec.arity) + " weights, got " +
             std::to_string(weights.size()));
      }
    } else {
      weights.assign(static_cast<std::size_t>(spec.arity), rational(1));
    }
    spec.threshold = threshold_spec::from_rationals(weights, t);
  } else if (head == "sym") {
    if (parts.size() != 2 && parts.size() != 3) {
      fail("expected sym:n or sym:n:l1,l2,...");
    }
    spec.kind = function_spec::family::symmetric;
    spec.arity = arity_token(boolean_function::max_arity);
    std::vector<int> levels;
    if (parts.size() == 3 && !parts[2].empty()) {
      for (std::string_view l : split(parts[2], ',')) {
        levels.push_back(static_cast<int>(parse_plain_int(l, text)));
      }
    }
    spec.symmetric = symmetric_spec::make(spec.arity, std::move(levels));
  } else if (head == "table") {
    if (parts.size() != 3 || parts[2].empty()) {
      fail("expected table:n:<hex>");
    }
    spec.kind = function_spec::family::table;
    spec.arity = arity_token(boolean_function::max_arity);
    spec.table_hex = std::string(parts[2]);
  } else {
    fail("unknown family '" + std::string(head) + "'");
  }
  return spec;
}

boolean_function realize(const function_spec& spec) {
  switch (spec.kind) {
    case function_spec::family::parity:
      return make_parity(spec.arity);
    case function_spec::family::majority:
      return make_majority(spec.arity);
    case function_spec::family::threshold:
      return make_threshold(*spec.threshold);
    case function_spec::family::inner_product:
      return make_inner_product(spec.ip_half);
    case function_spec::family::symmetric:
      return make_symmetric(*spec.symmetric);
    case function_spec::family::table:
      return function_from_hex(spec.arity, spec.table_hex);
  }
  throw invalid_argument("unreachable function family");
}

boolean_function parse_function(std::string_view text) {
  return realize(parse_function_spec(text));
}

std::string table_spec_text(const boolean_function& f) {
  return "table:" + std::to_string(f.arity()) + ":" + f.table_hex();
}

}  // namespace nnrep
