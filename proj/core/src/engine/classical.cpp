#include "parityforge/engine/engine.hpp"
#include "trace_builders.hpp"

namespace parityforge::engine {

namespace {

using proof::ProofStep;
using proof::ProofTrace;
using proof::RuleTag;
using proof::Statement;
using proof::Term;

ProofStep step(std::size_t id, RuleTag rule, std::vector<std::size_t> premises,
               Statement conclusion) {
  return ProofStep{id, rule, std::move(premises), std::move(conclusion)};
}

// Shared opening: sqrt(2) = p/q in lowest terms, squared and cleared.
// Returns the id of the cross-multiplied equation 2q^2 = p^2.
void open_with_vii22(ProofTrace& t, const Term& p, const Term& q) {
  t.steps.push_back(step(1, RuleTag::VII22_REDUCE, {}, Statement::coprime(p, q)));
}

Statement cross_multiplied(const Term& p, const Term& q) {
  return Statement::equal(Term::mul(Term::nat(2), Term::pow(q, 2)),
                          Term::pow(p, 2));
}

// The textbook proof: p even, hence q odd; halving shows q even too.
ProofTrace standard_trace() {
  Term p = Term::var("p");
  Term q = Term::var("q");
  Term r = Term::var("r");
  ProofTrace t;
  t.goal = Statement::falsum();
  open_with_vii22(t, p, q);
  t.steps.push_back(step(2, RuleTag::SQUARE_CROSS_MULTIPLY, {1},
                         cross_multiplied(p, q)));
  t.steps.push_back(step(3, RuleTag::EVEN_TIMES_TWO, {2},
                         Statement::even(Term::pow(p, 2))));
  t.steps.push_back(step(4, RuleTag::EVEN_SQUARE_EVEN_ROOT, {3},
                         Statement::even(p)));
  t.steps.push_back(step(5, RuleTag::COPRIME_NOT_BOTH_EVEN, {1, 4},
                         Statement::odd(q)));
  t.steps.push_back(step(
      6, RuleTag::EVEN_WITNESS, {4},
      Statement::equal(p, Term::mul(Term::nat(2), r))));
  t.steps.push_back(step(
      7, RuleTag::REWRITE_HALF, {2, 6},
      Statement::equal(Term::pow(q, 2),
                       Term::mul(Term::nat(2), Term::pow(r, 2)))));
  t.steps.push_back(step(8, RuleTag::EVEN_TIMES_TWO, {7},
                         Statement::even(Term::pow(q, 2))));
  t.steps.push_back(step(9, RuleTag::EVEN_SQUARE_EVEN_ROOT, {8},
                         Statement::even(q)));
  t.steps.push_back(step(10, RuleTag::PARITY_MISMATCH, {9, 5},
                         Statement::falsum()));
  return t;
}

// Alexander of Aphrodisias: p^2 and q^2 are coprime yet both even.
ProofTrace alexander_trace() {
  Term p = Term::var("p");
  Term q = Term::var("q");
  ProofTrace t;
  t.goal = Statement::falsum();
  open_with_vii22(t, p, q);
  t.steps.push_back(step(
      2, RuleTag::VII27_SQUARES, {1},
      Statement::coprime(Term::pow(p, 2), Term::pow(q, 2))));
  t.steps.push_back(step(3, RuleTag::SQUARE_CROSS_MULTIPLY, {1},
                         cross_multiplied(p, q)));
  t.steps.push_back(step(4, RuleTag::EVEN_TIMES_TWO, {3},
                         Statement::even(Term::pow(p, 2))));
  t.steps.push_back(step(5, RuleTag::HALF_OF_EVEN_SQUARE, {3},
                         Statement::even(Term::pow(q, 2))));
  t.steps.push_back(step(6, RuleTag::PARITY_MISMATCH, {2, 4, 5},
                         Statement::falsum()));
  return t;
}

// VIII.14 route: q^2 measures p^2, so q measures p, so q is the unit and
// 2 would be a square.
ProofTrace viii14_trace() {
  Term p = Term::var("p");
  Term q = Term::var("q");
  ProofTrace t;
  t.goal = Statement::falsum();
  open_with_vii22(t, p, q);
  t.steps.push_back(step(2, RuleTag::SQUARE_CROSS_MULTIPLY, {1},
                         cross_multiplied(p, q)));
  t.steps.push_back(step(
      3, RuleTag::DIVIDES_FROM_EQUATION, {2},
      Statement::divides(Term::pow(q, 2), Term::pow(p, 2))));
  t.steps.push_back(step(4, RuleTag::VIII14_DIVIDES, {3},
                         Statement::divides(q, p)));
  t.steps.push_back(step(5, RuleTag::COPRIME_DIVIDES_UNIT, {1, 4},
                         Statement::equal(q, Term::nat(1))));
  t.steps.push_back(step(
      6, RuleTag::SUBSTITUTE_UNIT, {2, 5},
      Statement::equal(Term::nat(2), Term::pow(p, 2))));
  t.steps.push_back(step(7, RuleTag::ORACLE, {6}, Statement::falsum()));
  return t;
}

}  // namespace

proof::ProofTrace classical_sqrt2_trace(ClassicalVariant variant) {
  switch (variant) {
    case ClassicalVariant::Parity:
      return detail::parity_sqrt_trace(2);
    case ClassicalVariant::Standard:
      return standard_trace();
    case ClassicalVariant::Alexander:
      return alexander_trace();
    case ClassicalVariant::Viii14:
      return viii14_trace();
  }
  return detail::parity_sqrt_trace(2);
}

std::string classical_variant_name(ClassicalVariant v) {
  switch (v) {
    case ClassicalVariant::Parity: return "parity";
    case ClassicalVariant::Standard: return "standard";
    case ClassicalVariant::Alexander: return "alexander";
    case ClassicalVariant::Viii14: return "viii14";
  }
  return {};
}

std::optional<ClassicalVariant> classical_variant_from_name(
    const std::string& name) {
  for (ClassicalVariant v :
       {ClassicalVariant::Parity, ClassicalVariant::Standard,
        ClassicalVariant::Alexander, ClassicalVariant::Viii14}) {
    if (classical_variant_name(v) == name) return v;
  }
  return std::nullopt;
}

}  // namespace parityforge::engine
