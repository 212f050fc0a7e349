#include "nnrep/points.hpp"

#include <bit>

#include "nnrep/errors.hpp"

namespace nnrep {

int boolean_point::weight() const { return std::popcount(bits); }

boolean_point make_boolean_point(std::uint32_t bits, int dimension) {
  if (dimension < 1 || dimension > 24) {
    throw arity_out_of_range("point dimension must be between 1 and 24, got " +
                             std::to_string(dimension));
  }
  if (dimension < 32 && (bits >> dimension) != 0) {
    throw invalid_argument("point bits exceed the stated dimension");
  }
  return boolean_point{bits, dimension};
}

boolean_point parse_boolean_point(std::string_view text) {
  std::uint32_t bits = 0;
  int dimension = 0;
  std::size_t i = 0;
  while (true) {
    if (i >= text.size() || (text[i] != '0' && text[i] != '1')) {
      throw parse_error("invalid point text: '" + std::string(text) +
                        "' (expected comma-separated bits like '1,0,1')");
    }
    if (text[i] == '1') {
      bits |= 1u << dimension;
    }
    ++dimension;
    ++i;
    if (i == text.size()) {
      break;
    }
    if (text[i] != ',') {
      throw parse_error("invalid point text: '" + std::string(text) + "'");
    }
    ++i;
  }
  return make_boolean_point(bits, dimension);
}

std::string bits_string(std::uint32_t bits, int dimension) {
  std::string out(static_cast<std::size_t>(dimension), '0');
  for (int i = 0; i < dimension; ++i) {
    if ((bits >> i) & 1u) {
      out[static_cast<std::size_t>(i)] = '1';
    }
  }
  return out;
}

int hamming(const boolean_point& a, const boolean_point& b) {
  if (a.dimension != b.dimension) {
    throw dimension_mismatch("hamming distance of points with dimensions " +
                             std::to_string(a.dimension) + " and " + std::to_string(b.dimension));
  }
  return std::popcount(a.bits ^ b.bits);
}

bool rational_point::is_boolean() const {
  for (const rational& c : coords_) {
    if (c != 0 && c != 1) {
      return false;
    }
  }
  return true;
}

std::uint32_t rational_point::boolean_bits() const {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 1) {
      bits |= 1u << i;
    } else if (coords_[i] != 0) {
      throw invalid_argument("boolean_bits() called on a non-Boolean point");
    }
  }
  return bits;
}

rational_point to_rational_point(const boolean_point& p) {
  std::vector<rational> coords(static_cast<std::size_t>(p.dimension));
  for (int i = 0; i < p.dimension; ++i) {
    coords[static_cast<std::size_t>(i)] = p.bit(i) ? 1 : 0;
  }
  return rational_point(std::move(coords));
}

rational sqdist(const rational_point& a, const rational_point& b) {
  if (a.dimension() != b.dimension()) {
    throw dimension_mismatch("squared distance of points with dimensions " +
                             std::to_string(a.dimension()) + " and " +
                             std::to_string(b.dimension()));
  }
  rational total = 0;
  for (int i = 0; i < a.dimension(); ++i) {
    rational diff = a[i] - b[i];
    total += diff * diff;
  }
  return total;
}

}  // namespace nnrep
