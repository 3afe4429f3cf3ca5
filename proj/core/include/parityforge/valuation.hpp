#pragma once

#include "parityforge/natural.hpp"

namespace parityforge {

// n = 2^degree * odd_part with odd_part odd and degree maximal. The degree
// is what classical arithmetic reaches by halving until an odd number
// remains; in modern terms it is the 2-adic valuation of n.
struct ParityDecomposition {
  Natural n;
  unsigned degree = 0;
  Natural odd_part;

  friend bool operator==(const ParityDecomposition&, const ParityDecomposition&) = default;
};

// n = base^exponent * cofactor with base not dividing cofactor and the
// exponent maximal.
struct BaseDecomposition {
  Natural base;
  Natural n;
  unsigned exponent = 0;
  Natural cofactor;

  friend bool operator==(const BaseDecomposition&, const BaseDecomposition&) = default;
};

// Unique decomposition n = 2^h * u, u odd. h = 0 for odd n. Throws
// DomainError for n = 0 (halving never terminates there).
ParityDecomposition decompose(const Natural& n);

// Inverse of decompose: 2^h * u.
Natural recompose(const ParityDecomposition& d);

// Product of two decomposed numbers without re-factoring: degrees add,
// odd parts multiply.
ParityDecomposition multiply_decomposed(const ParityDecomposition& a,
                                        const ParityDecomposition& b);

// Degree of parity of n^2: always even (twice the degree of n).
unsigned square_degree(const Natural& n);

// Degree of parity of n^3: always a multiple of 3.
unsigned cube_degree(const Natural& n);

// Generalization of decompose to an arbitrary base x >= 2.
BaseDecomposition base_decompose(const Natural& base, const Natural& n);

}  // namespace parityforge
