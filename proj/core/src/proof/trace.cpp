#include "parityforge/proof/trace.hpp"

#include <array>
#include <utility>

namespace parityforge::proof {

namespace {

constexpr std::array<std::pair<RuleTag, const char*>, 25> kRuleNames{{
    {RuleTag::HYPOTHESIS_RATIONAL, "HYPOTHESIS_RATIONAL"},
    {RuleTag::VAL_ADDITIVITY, "VAL_ADDITIVITY"},
    {RuleTag::VAL_SQUARE_EVEN, "VAL_SQUARE_EVEN"},
    {RuleTag::VAL_CUBE_TRIPLE, "VAL_CUBE_TRIPLE"},
    {RuleTag::EQUAL_DEGREES, "EQUAL_DEGREES"},
    {RuleTag::PARITY_MISMATCH, "PARITY_MISMATCH"},
    {RuleTag::UNIT_EVEN, "UNIT_EVEN"},
    {RuleTag::ALL_ODDS_EVEN, "ALL_ODDS_EVEN"},
    {RuleTag::ODD_ROOT_LEMMA, "ODD_ROOT_LEMMA"},
    {RuleTag::RESIDUE_EXHAUST, "RESIDUE_EXHAUST"},
    {RuleTag::VII30_PRIME_DEGREE, "VII30_PRIME_DEGREE"},
    {RuleTag::VII22_REDUCE, "VII22_REDUCE"},
    {RuleTag::SQUARE_CROSS_MULTIPLY, "SQUARE_CROSS_MULTIPLY"},
    {RuleTag::EVEN_SQUARE_EVEN_ROOT, "EVEN_SQUARE_EVEN_ROOT"},
    {RuleTag::VII27_SQUARES, "VII27_SQUARES"},
    {RuleTag::VIII14_DIVIDES, "VIII14_DIVIDES"},
    {RuleTag::EVEN_TIMES_TWO, "EVEN_TIMES_TWO"},
    {RuleTag::COPRIME_NOT_BOTH_EVEN, "COPRIME_NOT_BOTH_EVEN"},
    {RuleTag::EVEN_WITNESS, "EVEN_WITNESS"},
    {RuleTag::REWRITE_HALF, "REWRITE_HALF"},
    {RuleTag::HALF_OF_EVEN_SQUARE, "HALF_OF_EVEN_SQUARE"},
    {RuleTag::DIVIDES_FROM_EQUATION, "DIVIDES_FROM_EQUATION"},
    {RuleTag::COPRIME_DIVIDES_UNIT, "COPRIME_DIVIDES_UNIT"},
    {RuleTag::SUBSTITUTE_UNIT, "SUBSTITUTE_UNIT"},
    {RuleTag::ORACLE, "ORACLE"},
}};

}  // namespace

std::string rule_name(RuleTag tag) {
  for (const auto& [t, name] : kRuleNames) {
    if (t == tag) return name;
  }
  return "UNKNOWN";
}

std::optional<RuleTag> rule_from_name(const std::string& name) {
  for (const auto& [t, n] : kRuleNames) {
    if (name == n) return t;
  }
  return std::nullopt;
}

std::string rule_anchor(RuleTag tag) {
  switch (tag) {
    case RuleTag::HYPOTHESIS_RATIONAL:
      return "reductio hypothesis";
    case RuleTag::VAL_ADDITIVITY:
      return "degree of a product is the sum of the degrees";
    case RuleTag::VAL_SQUARE_EVEN:
      return "the degree of a square is even";
    case RuleTag::VAL_CUBE_TRIPLE:
      return "the degree of a cube is a multiple of 3";
    case RuleTag::EQUAL_DEGREES:
      return "equal numbers have equal degrees";
    case RuleTag::PARITY_MISMATCH:
      return "Aristotle, An. pr. I, 23: les impairs deviendraient "
             "egaux aux pairs";
    case RuleTag::UNIT_EVEN:
      return "an even degree one more than an even degree makes the unit even";
    case RuleTag::ALL_ODDS_EVEN:
      return "with the unit even, every odd number 2w + 1 is even";
    case RuleTag::ODD_ROOT_LEMMA:
      return "a square with odd square part has an odd root over odds";
    case RuleTag::RESIDUE_EXHAUST:
      return "no residue r below s satisfies s | r^2";
    case RuleTag::VII30_PRIME_DEGREE:
      return "Euclid, Elements VII.30: a prime dividing a square divides "
             "its root";
    case RuleTag::VII22_REDUCE:
      return "Euclid, Elements VII.22: the least ratio is in coprime terms";
    case RuleTag::SQUARE_CROSS_MULTIPLY:
      return "square the ratio and clear denominators";
    case RuleTag::EVEN_SQUARE_EVEN_ROOT:
      return "an even square has an even side";
    case RuleTag::VII27_SQUARES:
      return "Euclid, Elements VII.27: coprime numbers have coprime squares";
    case RuleTag::VIII14_DIVIDES:
      return "Euclid, Elements VIII.14: if a square measures a square, "
             "the side measures the side";
    case RuleTag::EVEN_TIMES_TWO:
      return "twice any number is even";
    case RuleTag::COPRIME_NOT_BOTH_EVEN:
      return "coprime numbers are not both even";
    case RuleTag::EVEN_WITNESS:
      return "an even number is twice some number";
    case RuleTag::REWRITE_HALF:
      return "substitute the even witness and halve";
    case RuleTag::HALF_OF_EVEN_SQUARE:
      return "half of an even square is itself even";
    case RuleTag::DIVIDES_FROM_EQUATION:
      return "a factor of one side measures the other";
    case RuleTag::COPRIME_DIVIDES_UNIT:
      return "Euclid, Elements VII def. 12: what measures coprimes is "
             "the unit";
    case RuleTag::SUBSTITUTE_UNIT:
      return "substitute the unit";
    case RuleTag::ORACLE:
      return "direct computation (anachronistic)";
  }
  return {};
}

std::string contradiction_shape_name(ContradictionShape s) {
  switch (s) {
    case ContradictionShape::None: return "none";
    case ContradictionShape::DoubleAttribute: return "double_attribute";
    case ContradictionShape::UnitEvenCollapse: return "unit_even_collapse";
    case ContradictionShape::DegreeMismatch: return "degree_mismatch";
    case ContradictionShape::CoprimeViolation: return "coprime_violation";
    case ContradictionShape::ResidueExhaustion: return "residue_exhaustion";
    case ContradictionShape::NonsquareOracle: return "nonsquare_oracle";
  }
  return {};
}

}  // namespace parityforge::proof
