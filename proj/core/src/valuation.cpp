#include "parityforge/valuation.hpp"

#include "parityforge/errors.hpp"

namespace parityforge {

namespace {

// Trailing-zero count via the backend's bit scan. Observationally identical
// to repeated halving; the test suite pins the two against each other.
unsigned two_adic_degree(const Natural& n) {
  return static_cast<unsigned>(lsb(n));
}

}  // namespace

ParityDecomposition decompose(const Natural& n) {
  if (n == 0) {
    throw DomainError("decompose: degree of parity is undefined for 0");
  }
  const unsigned h = two_adic_degree(n);
  return ParityDecomposition{n, h, n >> h};
}

Natural recompose(const ParityDecomposition& d) {
  return d.odd_part << d.degree;
}

ParityDecomposition multiply_decomposed(const ParityDecomposition& a,
                                        const ParityDecomposition& b) {
  ParityDecomposition r;
  r.degree = a.degree + b.degree;
  r.odd_part = a.odd_part * b.odd_part;
  r.n = r.odd_part << r.degree;
  return r;
}

unsigned square_degree(const Natural& n) {
  if (n == 0) throw DomainError("square_degree: undefined for 0");
  return 2 * two_adic_degree(n);
}

unsigned cube_degree(const Natural& n) {
  if (n == 0) throw DomainError("cube_degree: undefined for 0");
  return 3 * two_adic_degree(n);
}

BaseDecomposition base_decompose(const Natural& base, const Natural& n) {
  if (base <= 1) throw DomainError("base_decompose: base must be >= 2");
  if (n == 0) throw DomainError("base_decompose: undefined for 0");
  BaseDecomposition d{base, n, 0, n};
  Natural q, r;
  for (;;) {
    divide_qr(d.cofactor, base, q, r);
    if (r != 0) break;
    d.cofactor = q;
    ++d.exponent;
  }
  return d;
}

}  // namespace parityforge
