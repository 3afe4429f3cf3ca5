#include "parityforge/proof/term.hpp"

#include <cassert>

#include "parityforge/valuation.hpp"

namespace parityforge::proof {

struct Term::Node {
  Kind kind;
  std::string name;         // Var
  Natural value;            // Nat, and Pow exponent
  std::shared_ptr<const Node> a;  // lhs / base / operand
  std::shared_ptr<const Node> b;  // rhs
};

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::nat(Natural value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nat;
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::mul(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Term(std::move(n));
}

Term Term::pow(Term base, Natural exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->a = std::move(base.node_);
  n->value = std::move(exponent);
  return Term(std::move(n));
}

Term Term::deg(Term of) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Deg;
  n->a = std::move(of.node_);
  return Term(std::move(n));
}

Term Term::succ(Term of) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Succ;
  n->a = std::move(of.node_);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

const std::string& Term::var_name() const {
  assert(node_->kind == Kind::Var);
  return node_->name;
}

const Natural& Term::nat_value() const {
  assert(node_->kind == Kind::Nat);
  return node_->value;
}

Term Term::lhs() const {
  assert(node_->kind == Kind::Mul);
  return Term(node_->a);
}

Term Term::rhs() const {
  assert(node_->kind == Kind::Mul);
  return Term(node_->b);
}

Term Term::base() const {
  assert(node_->kind == Kind::Pow);
  return Term(node_->a);
}

const Natural& Term::exponent() const {
  assert(node_->kind == Kind::Pow);
  return node_->value;
}

Term Term::operand() const {
  assert(node_->kind == Kind::Deg || node_->kind == Kind::Succ);
  return Term(node_->a);
}

bool Term::is_concrete() const {
  switch (node_->kind) {
    case Kind::Var: return false;
    case Kind::Nat: return true;
    case Kind::Mul: return lhs().is_concrete() && rhs().is_concrete();
    case Kind::Pow: return base().is_concrete();
    case Kind::Deg:
    case Kind::Succ: return operand().is_concrete();
  }
  return false;
}

std::optional<Natural> Term::evaluate() const {
  switch (node_->kind) {
    case Kind::Var:
      return std::nullopt;
    case Kind::Nat:
      return node_->value;
    case Kind::Mul: {
      auto a = lhs().evaluate();
      auto b = rhs().evaluate();
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Kind::Pow: {
      auto b = base().evaluate();
      if (!b) return std::nullopt;
      if (node_->value > 1000000) return std::nullopt;  // keep evaluation bounded
      return pow_nat(*b, static_cast<unsigned>(node_->value));
    }
    case Kind::Deg: {
      auto v = operand().evaluate();
      if (!v || *v == 0) return std::nullopt;
      return Natural(decompose(*v).degree);
    }
    case Kind::Succ: {
      auto v = operand().evaluate();
      if (!v) return std::nullopt;
      return *v + 1;
    }
  }
  return std::nullopt;
}

void Term::collect_vars(std::set<std::string>& out) const {
  switch (node_->kind) {
    case Kind::Var:
      out.insert(node_->name);
      return;
    case Kind::Nat:
      return;
    case Kind::Mul:
      lhs().collect_vars(out);
      rhs().collect_vars(out);
      return;
    case Kind::Pow:
      base().collect_vars(out);
      return;
    case Kind::Deg:
    case Kind::Succ:
      operand().collect_vars(out);
      return;
  }
}

std::string Term::to_text() const {
  switch (node_->kind) {
    case Kind::Var: return node_->name;
    case Kind::Nat: return node_->value.str();
    case Kind::Mul: return lhs().to_text() + " * " + rhs().to_text();
    case Kind::Pow: {
      std::string b = base().to_text();
      if (base().kind() == Kind::Mul) b = "(" + b + ")";
      return b + "^" + node_->value.str();
    }
    case Kind::Deg: return "deg(" + operand().to_text() + ")";
    case Kind::Succ: return "(" + operand().to_text() + " + 1)";
  }
  return {};
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Term::Kind::Var: return a.node_->name == b.node_->name;
    case Term::Kind::Nat: return a.node_->value == b.node_->value;
    case Term::Kind::Mul: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Term::Kind::Pow:
      return a.node_->value == b.node_->value && a.base() == b.base();
    case Term::Kind::Deg:
    case Term::Kind::Succ:
      return a.operand() == b.operand();
  }
  return false;
}

}  // namespace parityforge::proof
