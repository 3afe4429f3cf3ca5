#pragma once

#include <string>

#include "parityforge/proof/trace.hpp"

namespace parityforge::proof {

inline constexpr const char* kTraceSchema = "parity-forge/trace/1";

enum class RenderFormat { Text, Json };

// JSON encoding of a trace (schema parity-forge/trace/1). Byte-stable for
// a fixed trace.
std::string trace_to_json(const ProofTrace& trace);

// Throws TraceParseError on malformed input.
ProofTrace trace_from_json(const std::string& json_text);

// Renders an accepted trace. Text output cites each rule's classical
// anchor; JSON output is trace_to_json. Throws RenderRefused if the trace
// is not accepted by check_trace.
std::string render_trace(const ProofTrace& trace, RenderFormat format);

}  // namespace parityforge::proof
