#include "parityforge/ancient.hpp"

#include <algorithm>

#include "parityforge/errors.hpp"
#include "parityforge/valuation.hpp"

namespace parityforge {

BinarySum binary_decompose(const Natural& n) {
  if (n == 0) throw DomainError("binary_decompose: undefined for 0");
  BinarySum sum{n, {}};
  for (int bit = static_cast<int>(msb(n)); bit >= 0; --bit) {
    if (bit_test(n, static_cast<unsigned>(bit))) {
      sum.exponents.push_back(static_cast<unsigned>(bit));
    }
  }
  return sum;
}

EgyptianWorksheet egyptian_multiply(const Natural& a, const Natural& b) {
  if (a == 0 || b == 0) {
    throw DomainError("egyptian_multiply: operands must be >= 1");
  }
  EgyptianWorksheet ws{a, b, {}, 0};
  const unsigned top = static_cast<unsigned>(msb(b));
  Natural power = 1;
  Natural partial = a;  // doubled row by row
  for (unsigned e = 0; e <= top; ++e) {
    WorksheetRow row{power, partial, bit_test(b, e)};
    if (row.selected) ws.total += partial;
    ws.rows.push_back(std::move(row));
    power <<= 1;
    partial <<= 1;
  }
  return ws;
}

Natural nicomachus_cell(unsigned k, const Natural& m) {
  if (k == 0) throw DomainError("nicomachus_cell: rows start at k = 1");
  return (2 * m + 1) << k;
}

std::pair<unsigned, Natural> nicomachus_index(const Natural& n) {
  if (n == 0 || is_odd(n)) {
    throw DomainError("nicomachus_index: the table holds even numbers only");
  }
  ParityDecomposition d = decompose(n);
  return {d.degree, (d.odd_part - 1) / 2};
}

Natural pair_bijection_encode(unsigned i, const Natural& j) {
  return (2 * j + 1) << i;
}

std::pair<unsigned, Natural> pair_bijection_decode(const Natural& n) {
  if (n == 0) throw DomainError("pair_bijection_decode: undefined for 0");
  ParityDecomposition d = decompose(n);
  return {d.degree, (d.odd_part - 1) / 2};
}

Natural proper_divisor_sum(const Natural& n) {
  if (n <= 1) return 0;
  Natural sum = 1;
  for (Natural d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      sum += d;
      Natural cofactor = n / d;
      if (cofactor != d) sum += cofactor;
    }
  }
  return sum;
}

std::vector<PerfectNumber> perfect_numbers(unsigned max_k) {
  if (max_k > kMaxPerfectExponent) {
    throw ConfigError("perfect_numbers: exponent cap is " +
                      std::to_string(kMaxPerfectExponent));
  }
  std::vector<PerfectNumber> out;
  for (unsigned k = 2; k < max_k; ++k) {
    Natural mersenne = pow2(k) - 1;
    if (!is_prime_trial_division(mersenne)) continue;
    PerfectNumber entry{k, mersenne, mersenne << (k - 1)};
    if (proper_divisor_sum(entry.perfect) != entry.perfect) {
      // Unreachable unless the generator itself is broken.
      throw ConfigError("perfect_numbers: divisor-sum verification failed");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<Natural> unit_fraction_split(const Natural& perfect) {
  if (!is_perfect(perfect)) {
    throw DomainError("unit_fraction_split: input is not a perfect number");
  }
  // Proper divisors d of n give 1 = sum of 1/(n/d).
  std::vector<Natural> denominators;
  for (Natural d = 1; d * d <= perfect; ++d) {
    if (perfect % d == 0) {
      denominators.push_back(perfect / d);
      Natural cofactor = perfect / d;
      if (cofactor != d && cofactor != perfect) {
        denominators.push_back(perfect / cofactor);
      }
    }
  }
  std::sort(denominators.begin(), denominators.end(), std::greater<>());
  denominators.erase(std::unique(denominators.begin(), denominators.end()),
                     denominators.end());
  return denominators;
}

}  // namespace parityforge
