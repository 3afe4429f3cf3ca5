#include <sstream>

#include "parityforge/errors.hpp"
#include "parityforge/proof/checker.hpp"
#include "parityforge/proof/serialize.hpp"

namespace parityforge::proof {

// Text rendering is for human inspection only; the JSON form is the one
// other tools should consume.
std::string render_trace(const ProofTrace& trace, RenderFormat format) {
  CheckResult result = check_trace(trace);
  if (!result.accepted) {
    throw RenderRefused("refusing to render a rejected trace: " + result.reason);
  }
  if (format == RenderFormat::Json) {
    return trace_to_json(trace);
  }
  std::ostringstream out;
  out << "goal: " << trace.goal.to_text() << "\n";
  for (const ProofStep& s : trace.steps) {
    out << "  [" << s.id << "] " << s.conclusion.to_text() << "\n";
    out << "      by " << rule_name(s.rule);
    if (!s.premises.empty()) {
      out << " from";
      for (std::size_t p : s.premises) out << " [" << p << "]";
    }
    out << " -- " << rule_anchor(s.rule) << "\n";
  }
  ContradictionShape shape = contradiction_shape(trace);
  if (shape != ContradictionShape::None) {
    out << "contradiction: " << contradiction_shape_name(shape) << "\n";
    if (shape == ContradictionShape::UnitEvenCollapse) {
      // An. pr. I, 23 again, in Aristotle's own phrasing.
      out << "les impairs deviendraient egaux aux pairs\n";
    }
  }
  return out.str();
}

}  // namespace parityforge::proof
