#include "trace_builders.hpp"

#include "parityforge/valuation.hpp"

namespace parityforge::engine::detail {

namespace {

using proof::ParityClass;
using proof::ProofStep;
using proof::ProofTrace;
using proof::RuleTag;
using proof::Statement;
using proof::Term;

ProofStep step(std::size_t id, RuleTag rule, std::vector<std::size_t> premises,
               Statement conclusion) {
  return ProofStep{id, rule, std::move(premises), std::move(conclusion)};
}

// n = 2^{k*i} * s, all concrete: the recorded kernel reduction.
Statement reduction_equality(const Natural& n, unsigned i, const Natural& s,
                             unsigned k) {
  return Statement::equal(
      Term::nat(n),
      Term::mul(Term::pow(Term::nat(2), Natural(k) * i), Term::nat(s)));
}

// x * q^k = p^k: the cross-multiplied rationality hypothesis.
Statement root_hypothesis(const Natural& x, const Term& q, const Term& p,
                          unsigned k) {
  return Statement::equal(Term::mul(Term::nat(x), Term::pow(q, k)),
                          Term::pow(p, k));
}

}  // namespace

ProofTrace parity_sqrt_trace(const Natural& x) {
  Term n = Term::var("n");
  Term m = Term::var("m");
  Term lhs = Term::mul(Term::nat(x), Term::pow(n, 2));
  ProofTrace t;
  t.goal = Statement::falsum();
  t.steps.push_back(step(1, RuleTag::HYPOTHESIS_RATIONAL, {},
                         root_hypothesis(x, n, m, 2)));
  t.steps.push_back(step(2, RuleTag::VAL_SQUARE_EVEN, {},
                         Statement::degree_is(Term::pow(n, 2), ParityClass::Even)));
  t.steps.push_back(step(3, RuleTag::VAL_SQUARE_EVEN, {},
                         Statement::degree_is(Term::pow(m, 2), ParityClass::Even)));
  if (x == 2) {
    // The unit-is-even form: deg(2n^2) = deg(n^2) + 1 meets deg(m^2), both
    // even, so 1 would be even and every odd 2w + 1 with it.
    t.steps.push_back(step(
        4, RuleTag::VAL_ADDITIVITY, {},
        Statement::equal(Term::deg(lhs), Term::succ(Term::deg(Term::pow(n, 2))))));
    t.steps.push_back(step(
        5, RuleTag::EQUAL_DEGREES, {1},
        Statement::equal(Term::deg(lhs), Term::deg(Term::pow(m, 2)))));
    t.steps.push_back(step(6, RuleTag::UNIT_EVEN, {2, 3, 4, 5},
                           Statement::even(Term::nat(1))));
    Term odd_w = Term::succ(Term::mul(Term::nat(2), Term::var("w")));
    t.steps.push_back(step(7, RuleTag::ALL_ODDS_EVEN, {6},
                           Statement::even(odd_w)));
    t.steps.push_back(step(8, RuleTag::PARITY_MISMATCH, {7},
                           Statement::falsum()));
    return t;
  }
  // General odd-degree radicand: left degree odd, right degree even.
  t.steps.push_back(step(4, RuleTag::VAL_ADDITIVITY, {2},
                         Statement::degree_is(lhs, ParityClass::Odd)));
  t.steps.push_back(step(
      5, RuleTag::EQUAL_DEGREES, {1},
      Statement::equal(Term::deg(lhs), Term::deg(Term::pow(m, 2)))));
  t.steps.push_back(step(6, RuleTag::PARITY_MISMATCH, {5, 4, 3},
                         Statement::falsum()));
  return t;
}

ProofTrace parity_cbrt_trace(const Natural& x) {
  Term n = Term::var("n");
  Term m = Term::var("m");
  Term lhs = Term::mul(Term::nat(x), Term::pow(n, 3));
  ProofTrace t;
  t.goal = Statement::falsum();
  t.steps.push_back(step(1, RuleTag::HYPOTHESIS_RATIONAL, {},
                         root_hypothesis(x, n, m, 3)));
  t.steps.push_back(step(
      2, RuleTag::VAL_CUBE_TRIPLE, {},
      Statement::degree_is(Term::pow(n, 3), ParityClass::MultipleOf3)));
  t.steps.push_back(step(
      3, RuleTag::VAL_CUBE_TRIPLE, {},
      Statement::degree_is(Term::pow(m, 3), ParityClass::MultipleOf3)));
  t.steps.push_back(step(
      4, RuleTag::VAL_ADDITIVITY, {2},
      Statement::degree_is(lhs, ParityClass::NotMultipleOf3)));
  t.steps.push_back(step(
      5, RuleTag::EQUAL_DEGREES, {1},
      Statement::equal(Term::deg(lhs), Term::deg(Term::pow(m, 3)))));
  t.steps.push_back(step(6, RuleTag::PARITY_MISMATCH, {5, 4, 3},
                         Statement::falsum()));
  return t;
}

ProofTrace residue_trace(const Natural& n, unsigned i, const Natural& s) {
  Term q = Term::var("n");
  Term p = Term::var("m");
  ProofTrace t;
  t.goal = Statement::falsum();
  t.steps.push_back(step(1, RuleTag::ORACLE, {}, reduction_equality(n, i, s, 2)));
  t.steps.push_back(step(2, RuleTag::HYPOTHESIS_RATIONAL, {1},
                         root_hypothesis(s, q, p, 2)));
  t.steps.push_back(step(3, RuleTag::ODD_ROOT_LEMMA, {2}, Statement::odd(p)));
  t.steps.push_back(step(
      4, RuleTag::DIVIDES_FROM_EQUATION, {2},
      Statement::divides(Term::nat(s), Term::pow(p, 2))));
  t.steps.push_back(step(5, RuleTag::RESIDUE_EXHAUST, {4}, Statement::falsum()));
  return t;
}

ProofTrace oracle_irrational_trace(const Natural& n, unsigned i,
                                   const Natural& s, unsigned k) {
  Term q = Term::var("n");
  Term p = Term::var("m");
  ProofTrace t;
  t.goal = Statement::falsum();
  t.steps.push_back(step(1, RuleTag::ORACLE, {}, reduction_equality(n, i, s, k)));
  t.steps.push_back(step(2, RuleTag::HYPOTHESIS_RATIONAL, {1},
                         root_hypothesis(s, q, p, k)));
  t.steps.push_back(step(3, RuleTag::ORACLE, {2}, Statement::falsum()));
  return t;
}

ProofTrace rational_trace(const Natural& n, unsigned i, const Natural& s,
                          const Natural& kernel_root, unsigned k) {
  const Natural root = pow2(i) * kernel_root;
  ProofTrace t;
  t.goal = Statement::equal(Term::pow(Term::nat(root), k), Term::nat(n));
  // Only the steps that carry information: the reduction when one happened,
  // the kernel witness when the kernel is not trivial, and the goal.
  std::size_t id = 1;
  if (i > 0) {
    t.steps.push_back(step(id++, RuleTag::ORACLE, {},
                           reduction_equality(n, i, s, k)));
  }
  if (s > 1) {
    t.steps.push_back(step(
        id++, RuleTag::ORACLE, {},
        Statement::equal(Term::pow(Term::nat(kernel_root), k), Term::nat(s))));
  }
  t.steps.push_back(step(id, RuleTag::ORACLE, {}, t.goal));
  return t;
}

ProofTrace prime_base_trace(const Natural& n, const Natural& x,
                            const Natural& k, const Natural& u) {
  Term q = Term::var("n");
  Term p = Term::var("m");
  ProofTrace t;
  t.goal = Statement::falsum();
  t.steps.push_back(step(1, RuleTag::HYPOTHESIS_RATIONAL, {},
                         root_hypothesis(n, q, p, 2)));
  t.steps.push_back(step(
      2, RuleTag::ORACLE, {},
      Statement::equal(Term::nat(n),
                       Term::mul(Term::pow(Term::nat(x), k), Term::nat(u)))));
  t.steps.push_back(step(3, RuleTag::VII30_PRIME_DEGREE, {1, 2},
                         Statement::falsum()));
  return t;
}

}  // namespace parityforge::engine::detail
