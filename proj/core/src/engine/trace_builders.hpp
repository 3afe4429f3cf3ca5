#pragma once

#include "parityforge/engine/verdict.hpp"

// Internal constructors for the traces the deciders emit. Every builder
// returns a trace the kernel accepts; the engine asserts as much before
// attaching one to a verdict.
namespace parityforge::engine::detail {

// Degree-of-parity reductio for sqrt(x), v2(x) odd. x = 2 gets the
// unit-is-even form; other x the general odd-plus-even mismatch.
proof::ProofTrace parity_sqrt_trace(const Natural& x);

// Cube analogue for v2(x) not a multiple of 3.
proof::ProofTrace parity_cbrt_trace(const Natural& x);

// Residue exhaustion over the odd kernel s of n = 2^{2i} * s.
proof::ProofTrace residue_trace(const Natural& n, unsigned i, const Natural& s);

// Direct-computation impossibility for the k-th root (k = 2 or 3) of the
// kernel s of n = 2^{k*i} * s.
proof::ProofTrace oracle_irrational_trace(const Natural& n, unsigned i,
                                          const Natural& s, unsigned k);

// Witnessed k-th root: n = 2^{k*i} * s, kernel_root^k = s, so the root of
// n is 2^i * kernel_root.
proof::ProofTrace rational_trace(const Natural& n, unsigned i,
                                 const Natural& s, const Natural& kernel_root,
                                 unsigned k);

// Odd-exponent prime-base criterion: n = x^k * u, x prime, k odd, x does
// not divide u.
proof::ProofTrace prime_base_trace(const Natural& n, const Natural& x,
                                   const Natural& k, const Natural& u);

}  // namespace parityforge::engine::detail
