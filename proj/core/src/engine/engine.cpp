#include "parityforge/engine/engine.hpp"

#include <cassert>
#include <cstdint>
#include <limits>

#include "parityforge/errors.hpp"
#include "parityforge/proof/checker.hpp"
#include "parityforge/valuation.hpp"
#include "trace_builders.hpp"

namespace parityforge::engine {

namespace {

Verdict with_trace(Verdict v, proof::ProofTrace trace) {
  assert(proof::check_trace(trace).accepted);
  v.trace = std::move(trace);
  return v;
}

Verdict rational(Strategy strategy, const Natural& n, unsigned i,
                 const Natural& s, const Natural& kernel_root, unsigned k) {
  Verdict v;
  v.kind = VerdictKind::Rational;
  v.strategy = strategy;
  v.root = pow2(i) * kernel_root;
  if (i > 0) v.reduced_kernel = s;
  return with_trace(std::move(v),
                    detail::rational_trace(n, i, s, kernel_root, k));
}

Verdict irrational(Strategy strategy, proof::ProofTrace trace, unsigned i,
                   const Natural& s) {
  Verdict v;
  v.kind = VerdictKind::Irrational;
  v.strategy = strategy;
  if (i > 0) v.reduced_kernel = s;
  return with_trace(std::move(v), std::move(trace));
}

// Residue scan over odd s >= 3: an exact witness r^2 = s decides Rational;
// a scan in which no r^2 is divisible by s decides Irrational; any other
// outcome (the 45 case: 15^2 divisible by 45 but unequal) proves nothing.
enum class ScanOutcome { Witness, Exhausted, Inconclusive };

ScanOutcome residue_scan(const Natural& s, Natural* witness) {
  bool saw_divisible = false;
  if (s <= std::numeric_limits<std::uint64_t>::max() / 4) {
    const std::uint64_t m = static_cast<std::uint64_t>(s);
    for (std::uint64_t r = 1; r < m; ++r) {
      const std::uint64_t sq = r * r;
      if (sq == m) {
        *witness = r;
        return ScanOutcome::Witness;
      }
      if (sq % m == 0) saw_divisible = true;
    }
  } else {
    for (Natural r = 1; r < s; ++r) {
      const Natural sq = r * r;
      if (sq == s) {
        *witness = r;
        return ScanOutcome::Witness;
      }
      if (sq % s == 0) saw_divisible = true;
    }
  }
  return saw_divisible ? ScanOutcome::Inconclusive : ScanOutcome::Exhausted;
}

Verdict root_verdict(const Natural& n, const SqrtPolicy& policy, unsigned k) {
  if (n == 0) throw DomainError("degree of parity of 0 is undefined");
  const ParityDecomposition d = decompose(n);

  // Pipeline state: the query has been reduced to the k-th root of cur,
  // with the answer scaled by 2^shift.
  Natural cur = n;
  unsigned shift = 0;
  bool reduced = false;

  for (Strategy strategy : policy.order) {
    switch (strategy) {
      case Strategy::PARITY_DEGREE: {
        if (cur != n) break;  // only meaningful before any reduction
        const bool blocked =
            k == 2 ? d.degree % 2 != 0 : d.degree % 3 != 0;
        if (blocked) {
          proof::ProofTrace t = k == 2 ? detail::parity_sqrt_trace(n)
                                       : detail::parity_cbrt_trace(n);
          return irrational(Strategy::PARITY_DEGREE, std::move(t), 0, n);
        }
        break;
      }
      case Strategy::ODD_KERNEL_REDUCTION: {
        const ParityDecomposition dc = decompose(cur);
        if (dc.degree % k != 0) break;  // parity strategy's territory
        shift += dc.degree / k;
        cur = dc.odd_part;
        reduced = true;
        if (cur == 1) {
          return rational(Strategy::ODD_KERNEL_REDUCTION, n, shift, cur, 1, k);
        }
        break;
      }
      case Strategy::RESIDUE_SCAN: {
        if (k != 2) break;              // squares only
        if (is_even(cur)) break;        // needs the odd kernel
        if (cur > policy.residue_cutoff) break;
        if (cur == 1) {
          return rational(Strategy::RESIDUE_SCAN, n, shift, cur, 1, k);
        }
        Natural witness;
        switch (residue_scan(cur, &witness)) {
          case ScanOutcome::Witness:
            return rational(Strategy::RESIDUE_SCAN, n, shift, cur, witness, k);
          case ScanOutcome::Exhausted:
            return irrational(Strategy::RESIDUE_SCAN,
                              detail::residue_trace(n, shift, cur), shift, cur);
          case ScanOutcome::Inconclusive:
            break;
        }
        break;
      }
      case Strategy::ORACLE_FALLBACK: {
        Natural r;
        const bool square = k == 2 ? is_perfect_square(cur, &r)
                                   : is_perfect_cube(cur, &r);
        if (square) {
          return rational(Strategy::ORACLE_FALLBACK, n, shift, cur, r, k);
        }
        return irrational(Strategy::ORACLE_FALLBACK,
                          detail::oracle_irrational_trace(n, shift, cur, k),
                          shift, cur);
      }
      case Strategy::PRIME_BASE:
      case Strategy::CLASSICAL_VII22:
        break;  // standalone deciders, not pipeline stages
    }
  }

  Verdict v;
  v.kind = VerdictKind::Inconclusive;
  v.strategy = policy.order.empty() ? Strategy::ORACLE_FALLBACK
                                    : policy.order.back();
  if (reduced && shift > 0) v.reduced_kernel = cur;
  v.reason = "no configured strategy decided the query";
  return v;
}

}  // namespace

Verdict sqrt_verdict(const Natural& n, const SqrtPolicy& policy) {
  return root_verdict(n, policy, 2);
}

Verdict cbrt_verdict(const Natural& n, const SqrtPolicy& policy) {
  return root_verdict(n, policy, 3);
}

Verdict prime_base_verdict(const Natural& x, const Natural& n) {
  if (x <= 1) throw DomainError("prime base must be at least 2");
  if (n == 0) throw DomainError("radicand must be at least 1");
  if (!is_prime_trial_division(x)) {
    throw StrategyRefused(
        "composite base " + to_string(x) +
        ": the odd-exponent criterion is unsound off primes");
  }
  const BaseDecomposition d = base_decompose(x, n);
  if (d.exponent % 2 != 0) {
    Verdict v;
    v.kind = VerdictKind::Irrational;
    v.strategy = Strategy::PRIME_BASE;
    return with_trace(std::move(v),
                      detail::prime_base_trace(n, x, d.exponent, d.cofactor));
  }
  Verdict v;
  v.kind = VerdictKind::Inconclusive;
  v.strategy = Strategy::PRIME_BASE;
  v.reason = "exponent of " + to_string(x) + " in " + to_string(n) +
             " is even; the criterion is one-directional";
  return v;
}

FailureReport generalization_failure_demo(const Natural& x,
                                          const Natural& bound) {
  if (x < 4 || is_prime_trial_division(x)) {
    throw DomainError("failure demo wants a composite base >= 4");
  }
  FailureReport report;
  report.base = x;
  report.bound = bound;
  // Smallest perfect square n <= bound in which x appears to an odd power.
  for (Natural r = 1; r * r <= bound; ++r) {
    const Natural n = r * r;
    const BaseDecomposition d = base_decompose(x, n);
    if (d.exponent % 2 != 0) {
      report.found = true;
      report.n = n;
      report.exponent = d.exponent;
      report.root = r;
      return report;
    }
  }
  return report;
}

std::pair<Natural, Natural> coprime_reduce(const Natural& p, const Natural& q) {
  if (p == 0 || q == 0) throw DomainError("ratio terms must be at least 1");
  const Natural g = gcd(p, q);
  return {p / g, q / g};
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::PARITY_DEGREE: return "PARITY_DEGREE";
    case Strategy::ODD_KERNEL_REDUCTION: return "ODD_KERNEL_REDUCTION";
    case Strategy::RESIDUE_SCAN: return "RESIDUE_SCAN";
    case Strategy::PRIME_BASE: return "PRIME_BASE";
    case Strategy::CLASSICAL_VII22: return "CLASSICAL_VII22";
    case Strategy::ORACLE_FALLBACK: return "ORACLE_FALLBACK";
  }
  return {};
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  for (Strategy s : {Strategy::PARITY_DEGREE, Strategy::ODD_KERNEL_REDUCTION,
                     Strategy::RESIDUE_SCAN, Strategy::PRIME_BASE,
                     Strategy::CLASSICAL_VII22, Strategy::ORACLE_FALLBACK}) {
    if (strategy_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Rational: return "rational";
    case VerdictKind::Irrational: return "irrational";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return {};
}

}  // namespace parityforge::engine
