#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>

#include "parityforge/natural.hpp"

namespace parityforge::proof {

// Immutable symbolic term: variables, concrete naturals, products, powers
// with concrete exponents, degree-of-parity, and successor (+1). Shared
// subtrees are never mutated, so copies are cheap and thread-safe.
class Term {
 public:
  enum class Kind { Var, Nat, Mul, Pow, Deg, Succ };

  static Term var(std::string name);
  static Term nat(Natural value);
  static Term mul(Term lhs, Term rhs);
  static Term pow(Term base, Natural exponent);
  static Term deg(Term of);
  static Term succ(Term of);

  Kind kind() const;

  // Accessors; each asserts the matching kind.
  const std::string& var_name() const;
  const Natural& nat_value() const;
  Term lhs() const;   // Mul
  Term rhs() const;   // Mul
  Term base() const;  // Pow
  const Natural& exponent() const;
  Term operand() const;  // Deg / Succ

  bool is_concrete() const;

  // Exact value of a concrete term; nullopt if any variable occurs or a
  // degree-of-parity of 0 would be taken.
  std::optional<Natural> evaluate() const;

  void collect_vars(std::set<std::string>& out) const;

  std::string to_text() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace parityforge::proof
