#pragma once

#include <utility>
#include <vector>

#include "parityforge/engine/verdict.hpp"

namespace parityforge::engine {

// Strategy pipeline configuration. Strategies run in the given order;
// PRIME_BASE and CLASSICAL_VII22 are standalone deciders and are ignored
// if listed here.
struct SqrtPolicy {
  std::vector<Strategy> order = {
      Strategy::PARITY_DEGREE,
      Strategy::ODD_KERNEL_REDUCTION,
      Strategy::RESIDUE_SCAN,
      Strategy::ORACLE_FALLBACK,
  };
  // RESIDUE_SCAN is linear in the kernel; above this it reports
  // Inconclusive rather than grind ("de plus en plus fastidieux").
  Natural residue_cutoff = 10000;
};

// Decides whether sqrt(n) is rational. Throws DomainError for n = 0.
Verdict sqrt_verdict(const Natural& n, const SqrtPolicy& policy = {});

// Decides whether cbrt(n) is rational. RESIDUE_SCAN does not apply to
// cubes and is skipped. Throws DomainError for n = 0.
Verdict cbrt_verdict(const Natural& n, const SqrtPolicy& policy = {});

// Odd-exponent criterion for a prime base x: if x^k exactly divides n with
// k odd, sqrt(n) is irrational; otherwise Inconclusive (one-directional).
// Throws StrategyRefused for composite x, DomainError for x <= 1 or n = 0.
Verdict prime_base_verdict(const Natural& x, const Natural& n);

// Why the odd-exponent criterion must refuse composite bases: a concrete n
// with x^k || n, k odd, yet sqrt(n) rational.
struct FailureReport {
  Natural base;
  bool found = false;
  Natural n;
  Natural exponent;  // k, odd
  Natural root;      // sqrt(n)
  Natural bound;     // search bound when nothing was found
};

// Bounded search (n <= bound) for a counterexample to the naive
// generalization. Throws DomainError unless x is composite and >= 4.
FailureReport generalization_failure_demo(const Natural& x,
                                          const Natural& bound = 1000000);

// Lowest-terms pair with the same ratio. Throws DomainError if either is 0.
std::pair<Natural, Natural> coprime_reduce(const Natural& p, const Natural& q);

// The classical proofs of the irrationality of sqrt(2).
enum class ClassicalVariant { Parity, Standard, Alexander, Viii14 };

std::string classical_variant_name(ClassicalVariant v);
std::optional<ClassicalVariant> classical_variant_from_name(
    const std::string& name);

// Full symbolic trace of the chosen proof; always kernel-accepted.
proof::ProofTrace classical_sqrt2_trace(ClassicalVariant variant);

}  // namespace parityforge::engine
