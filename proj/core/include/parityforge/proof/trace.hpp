#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parityforge/proof/statement.hpp"

namespace parityforge::proof {

// Closed set of inference rules. The first block mirrors the steps of the
// degree-of-parity proofs; the second the Euclidean-style proofs; ORACLE is
// the anachronistic direct-computation escape hatch and is always flagged
// as such when rendered.
enum class RuleTag {
  // Degree-of-parity calculus.
  HYPOTHESIS_RATIONAL,   // reductio hypothesis, pre-cross-multiplied
  VAL_ADDITIVITY,        // degree of a product = sum of degrees
  VAL_SQUARE_EVEN,       // degree of a square is even
  VAL_CUBE_TRIPLE,       // degree of a cube is a multiple of 3
  EQUAL_DEGREES,         // equal numbers have equal degrees
  PARITY_MISMATCH,       // incompatible parity facts -> FALSE
  UNIT_EVEN,             // even + 1 = even, so the unit is even
  ALL_ODDS_EVEN,         // unit even + definition of odd: every odd is even
  ODD_ROOT_LEMMA,        // rational root of an odd square is a ratio of odds
  RESIDUE_EXHAUST,       // no residue r < s has s | r^2
  VII30_PRIME_DEGREE,    // prime-base valuation mismatch

  // Euclidean-style steps.
  VII22_REDUCE,          // least ratio representation is coprime
  SQUARE_CROSS_MULTIPLY, // sqrt(x) = p/q squared and cleared of fractions
  EVEN_SQUARE_EVEN_ROOT, // even square has an even root
  VII27_SQUARES,         // coprime numbers have coprime squares
  VIII14_DIVIDES,        // q^2 | p^2 implies q | p
  EVEN_TIMES_TWO,        // twice anything is even
  COPRIME_NOT_BOTH_EVEN, // coprime pair cannot be both even
  EVEN_WITNESS,          // an even p is 2r for some r
  REWRITE_HALF,          // 2A = (2r)^2 rewritten to A = 2r^2
  HALF_OF_EVEN_SQUARE,   // 2A = p^2 forces A even
  DIVIDES_FROM_EQUATION, // a factor of one side divides the other
  COPRIME_DIVIDES_UNIT,  // coprime + divides forces the unit
  SUBSTITUTE_UNIT,       // replace a variable known to be 1

  // Plumbing.
  ORACLE,                // concrete fact checked by direct computation
};

std::string rule_name(RuleTag tag);
std::optional<RuleTag> rule_from_name(const std::string& name);

// Short classical source annotation used by the text renderer.
std::string rule_anchor(RuleTag tag);

struct ProofStep {
  std::size_t id = 0;
  RuleTag rule = RuleTag::ORACLE;
  std::vector<std::size_t> premises;
  Statement conclusion = Statement::falsum();

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

// Reductio traces carry goal = FALSE and end in a FALSE step; direct
// traces end in a step concluding the goal itself.
struct ProofTrace {
  Statement goal = Statement::falsum();
  std::vector<ProofStep> steps;

  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

struct CheckResult {
  bool accepted = false;
  std::optional<std::size_t> failed_step;
  std::string reason;
};

// The contradiction a reductio trace reaches, classified for reporting.
enum class ContradictionShape {
  None,              // direct (non-reductio) trace
  DoubleAttribute,   // one number both even and odd
  UnitEvenCollapse,  // the unit even, every odd collapsing into the evens
  DegreeMismatch,    // equal numbers with incompatible degrees
  CoprimeViolation,  // a coprime choice contradicted
  ResidueExhaustion, // no residue square divisible by the radicand
  NonsquareOracle,   // direct-computation impossibility
};

std::string contradiction_shape_name(ContradictionShape s);

}  // namespace parityforge::proof
