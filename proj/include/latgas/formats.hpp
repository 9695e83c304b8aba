#pragma once
// Textual formats: configurations as "+..-" symbol strings or comma-separated
// signed states, traces as newline-terminated rows. Round-trip safe.

#include "latgas/ring.hpp"

#include <string>
#include <vector>

namespace latgas {

enum class TraceStyle { Symbolic, Numeric };

struct ParseResult {
  RingConfig config;
  std::vector<Violation> violations; // parsed even when inadmissible
};

// Symbolic form "+..-" (states +-1/0 only) or numeric "1,0,0,-2". Throws
// std::invalid_argument on bad tokens, out-of-range states or short rings.
ParseResult parse_config(const std::string& text, int tau);

// One row. Symbolic style projects each state to its sign.
std::string format_config(const RingConfig& cfg, TraceStyle style);

// steps+1 rows, starting with cfg itself. Rejects inadmissible input.
std::vector<std::string> trace_rows(const RingConfig& cfg, long long steps, TraceStyle style);

// Header line "tau=T L=N" followed by the rows.
std::string format_trace(const RingConfig& cfg, long long steps, TraceStyle style);

} // namespace latgas
