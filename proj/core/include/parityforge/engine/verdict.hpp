#pragma once

#include <optional>
#include <string>

#include "parityforge/natural.hpp"
#include "parityforge/proof/trace.hpp"

namespace parityforge::engine {

// The layered deciders. Each verdict names the one strategy that settled
// it; ORACLE_FALLBACK is the anachronistic direct computation.
enum class Strategy {
  PARITY_DEGREE,
  ODD_KERNEL_REDUCTION,
  RESIDUE_SCAN,
  PRIME_BASE,
  CLASSICAL_VII22,
  ORACLE_FALLBACK,
};

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

enum class VerdictKind { Rational, Irrational, Inconclusive };

std::string verdict_kind_name(VerdictKind k);

// Outcome of a rationality query. Non-Inconclusive verdicts always carry a
// trace accepted by the proof kernel; Rational additionally carries the
// exact root.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Strategy strategy = Strategy::ORACLE_FALLBACK;
  std::optional<Natural> root;
  std::optional<Natural> reduced_kernel;  // odd kernel s when a reduction ran
  std::optional<proof::ProofTrace> trace;
  std::string reason;  // Inconclusive only
};

}  // namespace parityforge::engine
