#include "latgas/builtin_traces.hpp"

namespace latgas {

const std::vector<GoldenTrace>& golden_traces() {
  static const std::vector<GoldenTrace> traces = {
      {"ring17-symbolic",
       2,
       TraceStyle::Symbolic,
       {
           "+..+....-..++...-",
           ".+..+..-...+.+.-.",
           "..+..+-.....++.-.",
           "...+.+-.....++.-.",
           "....+-+.....+-.+.",
           "....+-.+....+-..+",
           "+...-+..+...-+...",
           ".+.-..+..+.-..+..",
           ".+.-...+.+.-...+.",
           ".+.-....++.-....+",
           "+-.+....+-.+.....",
           "+-..+...+-..+....",
           "-+...+..-+...+...",
           "..+...+-..+...+.-",
           "...+..+-...+..+.-",
           "....+.-+....+.+.-",
       }},
      {"ring17-numeric",
       2,
       TraceStyle::Numeric,
       {
           "1 0 0 1 0 0 0 0 -1 0 0 1 1 0 0 0 -1",
           "0 1 0 0 1 0 0 -1 0 0 0 1 0 1 0 -1 0",
           "0 0 1 0 0 1 -1 0 0 0 0 0 1 2 0 -2 0",
           "0 0 0 1 0 2 -2 0 0 0 0 0 1 3 0 -3 0",
           "0 0 0 0 1 -1 1 0 0 0 0 0 1 -1 0 1 0",
           "0 0 0 0 2 -2 0 1 0 0 0 0 2 -2 0 0 1",
           "1 0 0 0 -1 1 0 0 1 0 0 0 -1 1 0 0 0",
           "0 1 0 -1 0 0 1 0 0 1 0 -1 0 0 1 0 0",
           "0 2 0 -2 0 0 0 1 0 2 0 -2 0 0 0 1 0",
           "0 3 0 -3 0 0 0 0 1 3 0 -3 0 0 0 0 1",
           "1 -1 0 1 0 0 0 0 1 -1 0 1 0 0 0 0 0",
           "2 -2 0 0 1 0 0 0 2 -2 0 0 1 0 0 0 0",
           "-1 1 0 0 0 1 0 0 -1 1 0 0 0 1 0 0 0",
           "0 0 1 0 0 0 1 -1 0 0 1 0 0 0 1 0 -1",
           "0 0 0 1 0 0 2 -2 0 0 0 1 0 0 2 0 -2",
           "0 0 0 0 1 0 -1 1 0 0 0 0 1 0 3 0 -3",
       }},
      {"ring8-hysteresis",
       2,
       TraceStyle::Numeric,
       {
           "1 0 0 0 1 -1 1 -1",
           "0 1 0 0 2 -2 2 -2",
           "0 0 1 0 -1 1 -1 1",
           "1 0 2 0 -2 2 -2 0",
           "0 1 3 0 -3 -1 1 0",
           "0 1 -1 0 1 -1 0 1",
           "1 2 -2 0 2 -2 0 0",
           "1 -1 1 0 -1 1 0 0",
           "2 -2 2 0 -2 0 1 0",
           "-1 1 3 0 -3 0 0 1",
           "-2 1 -1 0 1 0 0 2",
           "1 2 -2 0 0 1 0 -1",
       }},
  };
  return traces;
}

RingConfig golden_protocluster_ring() {
  return RingConfig(2, {1, 0, 0, 1, 0, -1});
}

} // namespace latgas
