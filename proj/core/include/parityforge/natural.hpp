#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace parityforge {

// All arithmetic in this library is exact and non-negative. The alias keeps
// the big-integer backend in one place; functions below enforce the
// non-negativity contract at the API boundary.
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_odd(const Natural& n) { return bit_test(n, 0); }
inline bool is_even(const Natural& n) { return !bit_test(n, 0); }

inline Natural pow_nat(const Natural& base, unsigned exp) {
  Natural r = 1;
  Natural b = base;
  unsigned e = exp;
  while (e != 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return r;
}

inline Natural pow2(unsigned exp) {
  Natural r = 1;
  return r << exp;
}

// Largest r with r*r <= n.
inline Natural integer_sqrt(const Natural& n) {
  return boost::multiprecision::sqrt(n);
}

// Largest r with r*r*r <= n.
Natural integer_cbrt(const Natural& n);

inline bool is_perfect_square(const Natural& n, Natural* root = nullptr) {
  Natural r = integer_sqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline bool is_perfect_cube(const Natural& n, Natural* root = nullptr) {
  Natural r = integer_cbrt(n);
  if (root) *root = r;
  return r * r * r == n;
}

// Deterministic trial division. Intended for desk-scale inputs.
bool is_prime_trial_division(const Natural& n);

// Parses an unbounded decimal literal. Rejects signs, whitespace and
// non-digit characters; the empty string is not a number.
std::optional<Natural> parse_natural(std::string_view text);

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace parityforge
