#include <string>

#include "json.hpp"
#include "parityforge/errors.hpp"
#include "parityforge/proof/serialize.hpp"

namespace parityforge::proof {

namespace {

using nlohmann::json;

// Naturals travel as decimal strings so no reader is tempted to truncate
// them into doubles.

json term_to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return {{"t", "var"}, {"name", t.var_name()}};
    case Term::Kind::Nat:
      return {{"t", "nat"}, {"value", t.nat_value().str()}};
    case Term::Kind::Mul:
      return {{"t", "mul"}, {"lhs", term_to_json(t.lhs())},
              {"rhs", term_to_json(t.rhs())}};
    case Term::Kind::Pow:
      return {{"t", "pow"}, {"base", term_to_json(t.base())},
              {"exp", t.exponent().str()}};
    case Term::Kind::Deg:
      return {{"t", "deg"}, {"of", term_to_json(t.operand())}};
    case Term::Kind::Succ:
      return {{"t", "succ"}, {"of", term_to_json(t.operand())}};
  }
  return {};
}

json statement_to_json(const Statement& s) {
  switch (s.kind()) {
    case Statement::Kind::Equal:
      return {{"t", "equal"}, {"lhs", term_to_json(s.first())},
              {"rhs", term_to_json(s.second())}};
    case Statement::Kind::Odd:
      return {{"t", "odd"}, {"of", term_to_json(s.first())}};
    case Statement::Kind::Even:
      return {{"t", "even"}, {"of", term_to_json(s.first())}};
    case Statement::Kind::DegreeIs: {
      json j{{"t", "degree_is"}, {"of", term_to_json(s.first())},
             {"class", parity_class_name(s.parity_class())}};
      if (s.parity_class() == ParityClass::Value) {
        j["degree"] = s.degree().str();
      }
      return j;
    }
    case Statement::Kind::Coprime:
      return {{"t", "coprime"}, {"a", term_to_json(s.first())},
              {"b", term_to_json(s.second())}};
    case Statement::Kind::Divides:
      return {{"t", "divides"}, {"a", term_to_json(s.first())},
              {"b", term_to_json(s.second())}};
    case Statement::Kind::False:
      return {{"t", "false"}};
  }
  return {};
}

[[noreturn]] void fail(const std::string& what) { throw TraceParseError(what); }

std::string want_string(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
    fail(std::string("expected string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

Natural want_natural(const json& j, const char* key) {
  auto n = parse_natural(want_string(j, key));
  if (!n) fail(std::string("field '") + key + "' is not a decimal natural");
  return *n;
}

Term term_from_json(const json& j) {
  std::string t = want_string(j, "t");
  if (t == "var") return Term::var(want_string(j, "name"));
  if (t == "nat") return Term::nat(want_natural(j, "value"));
  if (t == "mul") {
    if (!j.contains("lhs") || !j.contains("rhs")) fail("mul needs lhs and rhs");
    return Term::mul(term_from_json(j["lhs"]), term_from_json(j["rhs"]));
  }
  if (t == "pow") {
    if (!j.contains("base")) fail("pow needs a base");
    return Term::pow(term_from_json(j["base"]), want_natural(j, "exp"));
  }
  if (t == "deg") {
    if (!j.contains("of")) fail("deg needs an operand");
    return Term::deg(term_from_json(j["of"]));
  }
  if (t == "succ") {
    if (!j.contains("of")) fail("succ needs an operand");
    return Term::succ(term_from_json(j["of"]));
  }
  fail("unknown term tag '" + t + "'");
}

Statement statement_from_json(const json& j) {
  std::string t = want_string(j, "t");
  if (t == "equal") {
    if (!j.contains("lhs") || !j.contains("rhs")) fail("equal needs lhs and rhs");
    return Statement::equal(term_from_json(j["lhs"]), term_from_json(j["rhs"]));
  }
  if (t == "odd") {
    if (!j.contains("of")) fail("odd needs an operand");
    return Statement::odd(term_from_json(j["of"]));
  }
  if (t == "even") {
    if (!j.contains("of")) fail("even needs an operand");
    return Statement::even(term_from_json(j["of"]));
  }
  if (t == "degree_is") {
    if (!j.contains("of")) fail("degree_is needs an operand");
    Term of = term_from_json(j["of"]);
    std::string cls = want_string(j, "class");
    if (cls == "even") return Statement::degree_is(of, ParityClass::Even);
    if (cls == "odd") return Statement::degree_is(of, ParityClass::Odd);
    if (cls == "multiple_of_3")
      return Statement::degree_is(of, ParityClass::MultipleOf3);
    if (cls == "not_multiple_of_3")
      return Statement::degree_is(of, ParityClass::NotMultipleOf3);
    if (cls == "value")
      return Statement::degree_value(of, want_natural(j, "degree"));
    fail("unknown parity class '" + cls + "'");
  }
  if (t == "coprime") {
    if (!j.contains("a") || !j.contains("b")) fail("coprime needs a and b");
    return Statement::coprime(term_from_json(j["a"]), term_from_json(j["b"]));
  }
  if (t == "divides") {
    if (!j.contains("a") || !j.contains("b")) fail("divides needs a and b");
    return Statement::divides(term_from_json(j["a"]), term_from_json(j["b"]));
  }
  if (t == "false") return Statement::falsum();
  fail("unknown statement tag '" + t + "'");
}

}  // namespace

std::string trace_to_json(const ProofTrace& trace) {
  json steps = json::array();
  for (const ProofStep& s : trace.steps) {
    steps.push_back({{"id", s.id},
                     {"rule", rule_name(s.rule)},
                     {"premises", s.premises},
                     {"conclusion", statement_to_json(s.conclusion)}});
  }
  json j{{"schema", kTraceSchema},
         {"goal", statement_to_json(trace.goal)},
         {"steps", std::move(steps)}};
  return j.dump(2);
}

ProofTrace trace_from_json(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) fail("not valid JSON");
  if (want_string(j, "schema") != kTraceSchema) {
    fail("unsupported schema (want parity-forge/trace/1)");
  }
  if (!j.contains("goal")) fail("missing goal");
  ProofTrace trace;
  trace.goal = statement_from_json(j["goal"]);
  if (!j.contains("steps") || !j["steps"].is_array()) {
    fail("missing steps array");
  }
  for (const json& js : j["steps"]) {
    ProofStep step;
    if (!js.is_object() || !js.contains("id") ||
        !js["id"].is_number_unsigned()) {
      fail("step needs an unsigned id");
    }
    step.id = js["id"].get<std::size_t>();
    auto rule = rule_from_name(want_string(js, "rule"));
    if (!rule) fail("unknown rule '" + want_string(js, "rule") + "'");
    step.rule = *rule;
    if (!js.contains("premises") || !js["premises"].is_array()) {
      fail("step needs a premises array");
    }
    for (const json& p : js["premises"]) {
      if (!p.is_number_unsigned()) fail("premise ids must be unsigned");
      step.premises.push_back(p.get<std::size_t>());
    }
    if (!js.contains("conclusion")) fail("step needs a conclusion");
    step.conclusion = statement_from_json(js["conclusion"]);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace parityforge::proof
