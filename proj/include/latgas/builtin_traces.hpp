#pragma once
// Golden traces used by the verify command and the regression suite. These
// are frozen reference evolutions of two small rings; any change to the step
// map that alters a single cell of a single row is caught byte-for-byte.

#include "latgas/formats.hpp"
#include "latgas/ring.hpp"

#include <string>
#include <vector>

namespace latgas {

struct GoldenTrace {
  std::string name;
  int tau;
  TraceStyle style;
  std::vector<std::string> rows; // rows[t] is the state at time t
};

// Three traces: a 17-site ring with 4 positives and 2 negatives printed both
// symbolically and numerically, and an 8-site ring from the hysteresis region.
const std::vector<GoldenTrace>& golden_traces();

// Period of the recurring three-particle pattern used by the verify command's
// attraction-boundary check: "1,0,0,1,0,-1" with tau=2.
RingConfig golden_protocluster_ring();

} // namespace latgas
