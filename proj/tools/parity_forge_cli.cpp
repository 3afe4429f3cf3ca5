// parity-forge: exact-integer parity calculus, rationality verdicts with
// machine-checkable traces, and a few pieces of ancient arithmetic.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parityforge/ancient.hpp"
#include "parityforge/engine/engine.hpp"
#include "parityforge/errors.hpp"
#include "parityforge/proof/checker.hpp"
#include "parityforge/proof/serialize.hpp"
#include "parityforge/valuation.hpp"

namespace {

namespace pf = parityforge;
using nlohmann::json;

constexpr const char* kEnvelopeSchema = "parity-forge/envelope/1";

// Exit codes: 0 ok, 2 domain error / malformed number, 3 inconclusive,
// 4 trace rejected, 64 usage.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitTraceRejected = 4;
constexpr int kExitUsage = 64;

pf::Natural parse_or_throw(const std::string& text) {
  auto n = pf::parse_natural(text);
  if (!n) throw pf::DomainError("not a decimal natural: '" + text + "'");
  return *n;
}

unsigned parse_small(const std::string& text, const char* what) {
  pf::Natural n = parse_or_throw(text);
  if (n > 1000000) throw pf::DomainError(std::string(what) + " too large");
  return static_cast<unsigned>(n);
}

void emit_envelope(const std::string& command, json inputs, json result,
                   json trace = nullptr) {
  json env{{"schema", kEnvelopeSchema},
           {"command", command},
           {"inputs", std::move(inputs)},
           {"result", std::move(result)}};
  if (!trace.is_null()) env["trace"] = std::move(trace);
  std::cout << env.dump(2) << "\n";
}

// Common flags shared by the verdict-producing subcommands.
struct VerdictOptions {
  bool json_mode = false;
  std::string trace_file;
  std::vector<std::string> strategies;
};

void add_verdict_flags(CLI::App* cmd, VerdictOptions* opt) {
  cmd->add_flag("--json", opt->json_mode, "emit a JSON envelope");
  cmd->add_option("--trace", opt->trace_file,
                  "write the proof trace (JSON) to this file");
  cmd->add_option("--strategies", opt->strategies,
                  "comma-separated strategy order")
      ->delimiter(',');
}

pf::engine::SqrtPolicy make_policy(const VerdictOptions& opt) {
  pf::engine::SqrtPolicy policy;
  if (const char* env = std::getenv("PARITY_FORGE_RESIDUE_CUTOFF")) {
    auto cutoff = pf::parse_natural(env);
    if (!cutoff) {
      throw pf::DomainError("PARITY_FORGE_RESIDUE_CUTOFF is not a natural");
    }
    policy.residue_cutoff = *cutoff;
  }
  if (!opt.strategies.empty()) {
    policy.order.clear();
    for (const std::string& name : opt.strategies) {
      auto s = pf::engine::strategy_from_name(name);
      if (!s) throw CLI::ValidationError("unknown strategy '" + name + "'");
      policy.order.push_back(*s);
    }
  }
  return policy;
}

json verdict_to_json(const pf::engine::Verdict& v) {
  json j{{"kind", pf::engine::verdict_kind_name(v.kind)},
         {"strategy", pf::engine::strategy_name(v.strategy)}};
  if (v.root) j["root"] = v.root->str();
  if (v.reduced_kernel) j["reduced_kernel"] = v.reduced_kernel->str();
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.trace) {
    j["contradiction"] =
        contradiction_shape_name(pf::proof::contradiction_shape(*v.trace));
  }
  return j;
}

// Returns the trace payload for the envelope: inline JSON, or the path it
// was written to.
json place_trace(const pf::proof::ProofTrace& trace,
                 const std::string& trace_file) {
  if (trace_file.empty()) return json::parse(pf::proof::trace_to_json(trace));
  std::ofstream out(trace_file);
  if (!out) throw pf::ConfigError("cannot write " + trace_file);
  out << pf::proof::trace_to_json(trace) << "\n";
  return json{{"file", trace_file}};
}

int report_verdict(const std::string& command, const std::string& n_text,
                   const pf::engine::Verdict& v, const VerdictOptions& opt) {
  json trace_payload;
  if (v.trace) trace_payload = place_trace(*v.trace, opt.trace_file);
  if (opt.json_mode) {
    emit_envelope(command, json{{"n", n_text}}, verdict_to_json(v),
                  trace_payload);
  } else {
    std::cout << command << "(" << n_text
              << "): " << pf::engine::verdict_kind_name(v.kind)
              << " [" << pf::engine::strategy_name(v.strategy) << "]\n";
    if (v.root) std::cout << "root: " << v.root->str() << "\n";
    if (v.reduced_kernel) {
      std::cout << "reduced to odd kernel " << v.reduced_kernel->str() << "\n";
    }
    if (!v.reason.empty()) std::cout << v.reason << "\n";
    if (v.trace && opt.trace_file.empty()) {
      std::cout << pf::proof::render_trace(*v.trace,
                                           pf::proof::RenderFormat::Text);
    }
  }
  return v.kind == pf::engine::VerdictKind::Inconclusive ? kExitInconclusive
                                                         : kExitOk;
}

int run_decompose(const std::string& n_text, bool json_mode) {
  pf::ParityDecomposition d = pf::decompose(parse_or_throw(n_text));
  if (json_mode) {
    emit_envelope("decompose", json{{"n", n_text}},
                  json{{"degree", d.degree}, {"odd_part", d.odd_part.str()}});
  } else {
    std::cout << d.n.str() << " = 2^" << d.degree << " * " << d.odd_part.str()
              << "\n";
  }
  return kExitOk;
}

int run_prove(const std::string& variant_name, const VerdictOptions& opt) {
  auto variant = pf::engine::classical_variant_from_name(variant_name);
  if (!variant) throw CLI::ValidationError("unknown variant '" + variant_name + "'");
  pf::proof::ProofTrace trace = pf::engine::classical_sqrt2_trace(*variant);
  json trace_payload = place_trace(trace, opt.trace_file);
  if (opt.json_mode) {
    emit_envelope(
        "prove", json{{"target", "sqrt2"}, {"variant", variant_name}},
        json{{"contradiction", contradiction_shape_name(
                                   pf::proof::contradiction_shape(trace))}},
        trace_payload);
  } else if (opt.trace_file.empty()) {
    std::cout << pf::proof::render_trace(trace, pf::proof::RenderFormat::Text);
  } else {
    std::cout << "trace written to " << opt.trace_file << "\n";
  }
  return kExitOk;
}

int run_check(const std::string& file, bool json_mode) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot read " << file << "\n";
    return kExitDomain;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  pf::proof::ProofTrace trace;
  try {
    trace = pf::proof::trace_from_json(buf.str());
  } catch (const pf::TraceParseError& e) {
    if (json_mode) {
      emit_envelope("check", json{{"file", file}},
                    json{{"accepted", false}, {"reason", e.what()}});
    } else {
      std::cout << "Rejected: " << e.what() << "\n";
    }
    return kExitTraceRejected;
  }
  pf::proof::CheckResult r = pf::proof::check_trace(trace);
  if (json_mode) {
    json result{{"accepted", r.accepted}};
    if (!r.accepted) {
      result["reason"] = r.reason;
      if (r.failed_step) result["failed_step"] = *r.failed_step;
    } else {
      result["contradiction"] =
          contradiction_shape_name(pf::proof::contradiction_shape(trace));
    }
    emit_envelope("check", json{{"file", file}}, std::move(result));
  } else if (r.accepted) {
    std::cout << "Accepted\n";
  } else {
    std::cout << "Rejected";
    if (r.failed_step) std::cout << " at step " << *r.failed_step;
    std::cout << ": " << r.reason << "\n";
  }
  return r.accepted ? kExitOk : kExitTraceRejected;
}

int run_egymul(const std::string& a_text, const std::string& b_text,
               bool json_mode) {
  pf::EgyptianWorksheet ws =
      pf::egyptian_multiply(parse_or_throw(a_text), parse_or_throw(b_text));
  if (json_mode) {
    json rows = json::array();
    for (const pf::WorksheetRow& r : ws.rows) {
      rows.push_back({{"power_of_two", r.power_of_two.str()},
                      {"partial", r.partial.str()},
                      {"selected", r.selected}});
    }
    emit_envelope("egymul", json{{"a", a_text}, {"b", b_text}},
                  json{{"rows", std::move(rows)}, {"total", ws.total.str()}});
  } else {
    for (const pf::WorksheetRow& r : ws.rows) {
      std::cout << std::setw(12) << r.power_of_two.str() << std::setw(14)
                << r.partial.str() << (r.selected ? "  *" : "") << "\n";
    }
    std::cout << "total: " << ws.total.str() << "\n";
  }
  return kExitOk;
}

int run_table(unsigned rows, unsigned cols, bool json_mode) {
  if (rows == 0 || cols == 0) {
    throw pf::DomainError("table wants at least one row and one column");
  }
  if (json_mode) {
    json table = json::array();
    for (unsigned k = 1; k <= rows; ++k) {
      json row = json::array();
      for (unsigned m = 0; m < cols; ++m) {
        row.push_back(pf::nicomachus_cell(k, m).str());
      }
      table.push_back(std::move(row));
    }
    emit_envelope("table", json{{"rows", rows}, {"cols", cols}},
                  json{{"cells", std::move(table)}});
  } else {
    for (unsigned k = 1; k <= rows; ++k) {
      for (unsigned m = 0; m < cols; ++m) {
        std::cout << std::setw(12) << pf::nicomachus_cell(k, m).str();
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_bijection_encode(const std::string& i_text, const std::string& j_text,
                         bool json_mode) {
  unsigned i = parse_small(i_text, "exponent");
  pf::Natural n = pf::pair_bijection_encode(i, parse_or_throw(j_text));
  if (json_mode) {
    emit_envelope("bijection", json{{"mode", "encode"}, {"i", i_text}, {"j", j_text}},
                  json{{"n", n.str()}});
  } else {
    std::cout << n.str() << "\n";
  }
  return kExitOk;
}

int run_bijection_decode(const std::string& n_text, bool json_mode) {
  auto [i, j] = pf::pair_bijection_decode(parse_or_throw(n_text));
  if (json_mode) {
    emit_envelope("bijection", json{{"mode", "decode"}, {"n", n_text}},
                  json{{"i", i}, {"j", j.str()}});
  } else {
    std::cout << "(" << i << ", " << j.str() << ")\n";
  }
  return kExitOk;
}

int run_perfect(unsigned max_k, bool json_mode) {
  std::vector<pf::PerfectNumber> out = pf::perfect_numbers(max_k);
  if (json_mode) {
    json list = json::array();
    for (const pf::PerfectNumber& p : out) {
      list.push_back({{"k", p.k},
                      {"mersenne", p.mersenne.str()},
                      {"perfect", p.perfect.str()}});
    }
    emit_envelope("perfect", json{{"max_k", max_k}},
                  json{{"perfect_numbers", std::move(list)}});
  } else {
    for (const pf::PerfectNumber& p : out) {
      std::cout << "k=" << p.k << "  2^k-1=" << p.mersenne.str()
                << "  perfect=" << p.perfect.str() << "\n";
    }
  }
  return kExitOk;
}

int run_failure_demo(const std::string& x_text, bool json_mode) {
  pf::engine::FailureReport r =
      pf::engine::generalization_failure_demo(parse_or_throw(x_text));
  if (json_mode) {
    json result{{"base", r.base.str()}, {"found", r.found}};
    if (r.found) {
      result["n"] = r.n.str();
      result["exponent"] = r.exponent.str();
      result["root"] = r.root.str();
    } else {
      result["bound"] = r.bound.str();
    }
    emit_envelope("failure-demo", json{{"x", x_text}}, std::move(result));
  } else if (r.found) {
    std::cout << "counterexample: n = " << r.n.str() << " has "
              << r.base.str() << "^" << r.exponent.str()
              << " exactly (odd exponent), yet sqrt(" << r.n.str()
              << ") = " << r.root.str() << "\n";
  } else {
    std::cout << "no counterexample up to " << r.bound.str() << "\n";
  }
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact parity calculus, rationality verdicts with "
               "machine-checkable traces, and ancient arithmetic"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized helpers");

  std::string n_text, a_text, b_text, file, variant = "parity";
  bool json_mode = false;
  VerdictOptions sqrt_opt, cbrt_opt, prove_opt;
  unsigned rows = 0, cols = 0, max_k = pf::kMaxPerfectExponent;

  CLI::App* decompose = app.add_subcommand("decompose", "n = 2^h * u, u odd");
  decompose->add_option("N", n_text)->required();
  decompose->add_flag("--json", json_mode);

  CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "is sqrt(N) rational?");
  sqrt_cmd->add_option("N", n_text)->required();
  add_verdict_flags(sqrt_cmd, &sqrt_opt);

  CLI::App* cbrt_cmd = app.add_subcommand("cbrt", "is cbrt(N) rational?");
  cbrt_cmd->add_option("N", n_text)->required();
  add_verdict_flags(cbrt_cmd, &cbrt_opt);

  CLI::App* prove = app.add_subcommand("prove", "classical irrationality proofs");
  std::string target;
  prove->add_option("TARGET", target)->required()->check(CLI::IsMember({"sqrt2"}));
  prove->add_option("--variant", variant)
      ->check(CLI::IsMember({"parity", "standard", "alexander", "viii14"}));
  prove->add_flag("--json", prove_opt.json_mode);
  prove->add_option("--trace", prove_opt.trace_file);

  CLI::App* check = app.add_subcommand("check", "verify a trace file");
  check->add_option("FILE", file)->required();
  check->add_flag("--json", json_mode);

  CLI::App* egymul = app.add_subcommand("egymul", "Egyptian multiplication");
  egymul->add_option("A", a_text)->required();
  egymul->add_option("B", b_text)->required();
  egymul->add_flag("--json", json_mode);

  CLI::App* table = app.add_subcommand("table", "table of the evens 2^k(2m+1)");
  table->add_option("--rows", rows)->required();
  table->add_option("--cols", cols)->required();
  table->add_flag("--json", json_mode);

  CLI::App* bijection = app.add_subcommand("bijection", "pairs <-> positives");
  bijection->require_subcommand(1);
  CLI::App* encode = bijection->add_subcommand("encode");
  encode->add_option("I", a_text)->required();
  encode->add_option("J", b_text)->required();
  encode->add_flag("--json", json_mode);
  CLI::App* decode = bijection->add_subcommand("decode");
  decode->add_option("N", n_text)->required();
  decode->add_flag("--json", json_mode);

  CLI::App* perfect = app.add_subcommand("perfect", "Euclid's perfect numbers");
  perfect->add_option("--max-k", max_k)->required();
  perfect->add_flag("--json", json_mode);

  CLI::App* failure = app.add_subcommand(
      "failure-demo", "why the odd-exponent criterion needs a prime base");
  failure->add_option("X", n_text)->required();
  failure->add_flag("--json", json_mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (decompose->parsed()) return run_decompose(n_text, json_mode);
  if (sqrt_cmd->parsed()) {
    return report_verdict(
        "sqrt", n_text,
        pf::engine::sqrt_verdict(parse_or_throw(n_text), make_policy(sqrt_opt)),
        sqrt_opt);
  }
  if (cbrt_cmd->parsed()) {
    return report_verdict(
        "cbrt", n_text,
        pf::engine::cbrt_verdict(parse_or_throw(n_text), make_policy(cbrt_opt)),
        cbrt_opt);
  }
  if (prove->parsed()) return run_prove(variant, prove_opt);
  if (check->parsed()) return run_check(file, json_mode);
  if (egymul->parsed()) return run_egymul(a_text, b_text, json_mode);
  if (table->parsed()) return run_table(rows, cols, json_mode);
  if (encode->parsed()) return run_bijection_encode(a_text, b_text, json_mode);
  if (decode->parsed()) return run_bijection_decode(n_text, json_mode);
  if (perfect->parsed()) return run_perfect(max_k, json_mode);
  if (failure->parsed()) return run_failure_demo(n_text, json_mode);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const pf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const pf::StrategyRefused& e) {
    std::cerr << "strategy refused: " << e.what() << "\n";
    return kExitDomain;
  } catch (const pf::RenderRefused& e) {
    std::cerr << e.what() << "\n";
    return kExitTraceRejected;
  } catch (const pf::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitDomain;
  }
}
