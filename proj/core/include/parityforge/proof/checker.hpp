#pragma once

#include "parityforge/proof/trace.hpp"

namespace parityforge::proof {

// Validates every step of the trace against its rule's side conditions.
// Pure function: same trace, same result. Structural defects (dangling or
// forward premise references, non-contiguous ids, final step not matching
// the goal) are reported with the offending step where one exists.
CheckResult check_trace(const ProofTrace& trace);

// Classifies the contradiction an accepted reductio trace reaches.
ContradictionShape contradiction_shape(const ProofTrace& trace);

}  // namespace parityforge::proof
