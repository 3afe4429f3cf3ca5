#pragma once

#include <utility>
#include <vector>

#include "parityforge/natural.hpp"

namespace parityforge {

// n as a sum of distinct powers of two, exponents strictly decreasing.
struct BinarySum {
  Natural n;
  std::vector<unsigned> exponents;
};

// One doubling row of the scribe's worksheet. `selected` marks the rows
// whose power of two occurs in the multiplier's binary sum.
struct WorksheetRow {
  Natural power_of_two;
  Natural partial;
  bool selected = false;
};

struct EgyptianWorksheet {
  Natural multiplicand;
  Natural multiplier;
  std::vector<WorksheetRow> rows;
  Natural total;
};

// Entry of the perfect-number generator: 2^(k-1) * (2^k - 1) for each k
// whose Mersenne number 2^k - 1 is prime.
struct PerfectNumber {
  unsigned k = 0;
  Natural mersenne;
  Natural perfect;
};

BinarySum binary_decompose(const Natural& n);

// Doubling rows of `a`, selected by the binary sum of `b`. Both operands
// must be >= 1; the ancient scheme has no zero.
EgyptianWorksheet egyptian_multiply(const Natural& a, const Natural& b);

// Cell (k, m) of the table of evens: 2^k * (2m + 1), k >= 1.
Natural nicomachus_cell(unsigned k, const Natural& m);

// Inverse of nicomachus_cell; defined for even n >= 2 only.
std::pair<unsigned, Natural> nicomachus_index(const Natural& n);

// (i, j) -> 2^i * (2j + 1): a bijection between pairs of non-negative
// integers and the positive integers.
Natural pair_bijection_encode(unsigned i, const Natural& j);
std::pair<unsigned, Natural> pair_bijection_decode(const Natural& n);

inline constexpr unsigned kMaxPerfectExponent = 31;

// Perfect numbers 2^(k-1) * (2^k - 1) for k < max_k with 2^k - 1 prime.
// Every output is re-verified against the proper-divisor sum.
std::vector<PerfectNumber> perfect_numbers(unsigned max_k);

// Sum of proper divisors (trial division up to sqrt n).
Natural proper_divisor_sum(const Natural& n);

inline bool is_perfect(const Natural& n) {
  return n >= 1 && proper_divisor_sum(n) == n;
}

// Denominators d such that 1 = sum of 1/d, one per proper divisor of the
// perfect input (1 = 1/6 + 1/3 + 1/2 for 6). Largest denominator first.
std::vector<Natural> unit_fraction_split(const Natural& perfect);

}  // namespace parityforge
