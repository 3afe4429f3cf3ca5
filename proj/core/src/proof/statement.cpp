#include "parityforge/proof/statement.hpp"

#include <cassert>

namespace parityforge::proof {

std::string parity_class_name(ParityClass c) {
  switch (c) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    case ParityClass::MultipleOf3: return "multiple_of_3";
    case ParityClass::NotMultipleOf3: return "not_multiple_of_3";
    case ParityClass::Value: return "value";
  }
  return {};
}

Statement Statement::equal(Term lhs, Term rhs) {
  Statement s;
  s.kind_ = Kind::Equal;
  s.terms_ = {std::move(lhs), std::move(rhs)};
  return s;
}

Statement Statement::odd(Term of) {
  Statement s;
  s.kind_ = Kind::Odd;
  s.terms_ = {std::move(of)};
  return s;
}

Statement Statement::even(Term of) {
  Statement s;
  s.kind_ = Kind::Even;
  s.terms_ = {std::move(of)};
  return s;
}

Statement Statement::degree_is(Term of, ParityClass cls) {
  assert(cls != ParityClass::Value);
  Statement s;
  s.kind_ = Kind::DegreeIs;
  s.terms_ = {std::move(of)};
  s.cls_ = cls;
  return s;
}

Statement Statement::degree_value(Term of, Natural value) {
  Statement s;
  s.kind_ = Kind::DegreeIs;
  s.terms_ = {std::move(of)};
  s.cls_ = ParityClass::Value;
  s.degree_ = std::move(value);
  return s;
}

Statement Statement::coprime(Term a, Term b) {
  Statement s;
  s.kind_ = Kind::Coprime;
  s.terms_ = {std::move(a), std::move(b)};
  return s;
}

Statement Statement::divides(Term a, Term b) {
  Statement s;
  s.kind_ = Kind::Divides;
  s.terms_ = {std::move(a), std::move(b)};
  return s;
}

Statement Statement::falsum() { return Statement(); }

const Term& Statement::first() const {
  assert(!terms_.empty());
  return terms_[0];
}

const Term& Statement::second() const {
  assert(terms_.size() >= 2);
  return terms_[1];
}

void Statement::collect_vars(std::set<std::string>& out) const {
  for (const Term& t : terms_) t.collect_vars(out);
}

std::string Statement::to_text() const {
  switch (kind_) {
    case Kind::Equal:
      return first().to_text() + " = " + second().to_text();
    case Kind::Odd:
      return first().to_text() + " is odd";
    case Kind::Even:
      return first().to_text() + " is even";
    case Kind::DegreeIs:
      if (cls_ == ParityClass::Value) {
        return "deg(" + first().to_text() + ") = " + degree_.str();
      }
      return "deg(" + first().to_text() + ") is " + parity_class_name(cls_);
    case Kind::Coprime:
      return first().to_text() + " and " + second().to_text() + " are coprime";
    case Kind::Divides:
      return first().to_text() + " divides " + second().to_text();
    case Kind::False:
      return "FALSE";
  }
  return {};
}

bool operator==(const Statement& a, const Statement& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Statement::Kind::DegreeIs) {
    if (a.cls_ != b.cls_) return false;
    if (a.cls_ == ParityClass::Value && a.degree_ != b.degree_) return false;
  }
  return a.terms_ == b.terms_;
}

}  // namespace parityforge::proof
