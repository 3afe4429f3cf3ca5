#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parityforge/proof/term.hpp"

namespace parityforge::proof {

// Residue information about a degree of parity.
enum class ParityClass {
  Even,
  Odd,
  MultipleOf3,
  NotMultipleOf3,
  Value,  // a concrete degree, carried alongside
};

std::string parity_class_name(ParityClass c);

// Quantifier-free statements over the term grammar. Traces are schematic:
// a free variable stands for an arbitrary natural.
class Statement {
 public:
  enum class Kind { Equal, Odd, Even, DegreeIs, Coprime, Divides, False };

  static Statement equal(Term lhs, Term rhs);
  static Statement odd(Term of);
  static Statement even(Term of);
  static Statement degree_is(Term of, ParityClass cls);
  static Statement degree_value(Term of, Natural value);
  static Statement coprime(Term a, Term b);
  static Statement divides(Term a, Term b);
  static Statement falsum();

  Kind kind() const { return kind_; }
  const Term& first() const;
  const Term& second() const;
  ParityClass parity_class() const { return cls_; }
  const Natural& degree() const { return degree_; }

  bool is_false() const { return kind_ == Kind::False; }
  void collect_vars(std::set<std::string>& out) const;
  std::string to_text() const;

  friend bool operator==(const Statement& a, const Statement& b);
  friend bool operator!=(const Statement& a, const Statement& b) { return !(a == b); }

 private:
  Statement() = default;
  Kind kind_ = Kind::False;
  std::vector<Term> terms_;
  ParityClass cls_ = ParityClass::Even;
  Natural degree_;
};

}  // namespace parityforge::proof
