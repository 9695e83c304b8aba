#include "latgas/formats.hpp"

#include "latgas/builtin_traces.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace latgas;

TEST_CASE("symbolic parse matches the numeric seed") {
  const ParseResult sym = parse_config("+..+....-..++...-", 2);
  const ParseResult num =
      parse_config("1,0,0,1,0,0,0,0,-1,0,0,1,1,0,0,0,-1", 2);
  CHECK(sym.config == num.config);
  CHECK(sym.violations.empty());
}

TEST_CASE("numeric parse accepts spaces and commas") {
  const ParseResult a = parse_config("1 0 0 1 0 -1", 2);
  const ParseResult b = parse_config("1,0,0,1,0,-1", 2);
  CHECK(a.config == b.config);
  CHECK(a.config.cells == std::vector<SiteState>{1, 0, 0, 1, 0, -1});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_config("....", 2), std::invalid_argument);        // too short
  CHECK_THROWS_AS(parse_config("1,0,0,0,4", 2), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(parse_config("1,0,x,0,0", 2), std::invalid_argument);   // bad token
}

TEST_CASE("inadmissible input still parses, with violations reported") {
  const ParseResult p = parse_config("2,0,0,0,0", 2);
  CHECK(!p.violations.empty());
  CHECK(p.config.cells[0] == 2);
}

TEST_CASE("round trip in both styles") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> len(5, 40), taud(1, 5);
    const RingConfig cfg = testutil::random_ring(rng, len(rng), taud(rng));
    CHECK(parse_config(format_config(cfg, TraceStyle::Numeric), cfg.tau).config == cfg);
    bool representable = true;
    for (SiteState s : cfg.cells) representable &= std::abs(s) <= 1;
    if (representable)
      CHECK(parse_config(format_config(cfg, TraceStyle::Symbolic), cfg.tau).config == cfg);
  }
}

TEST_CASE("symbolic trace is the sign projection of the numeric trace") {
  const GoldenTrace& numeric = golden_traces()[1];
  const ParseResult seed = parse_config(numeric.rows.front(), numeric.tau);
  const auto sym = trace_rows(seed.config, 15, TraceStyle::Symbolic);
  const auto num = trace_rows(seed.config, 15, TraceStyle::Numeric);
  REQUIRE(sym.size() == num.size());
  for (size_t t = 0; t < num.size(); ++t) {
    const RingConfig row = parse_config(num[t], numeric.tau).config;
    CHECK(format_config(row, TraceStyle::Symbolic) == sym[t]);
  }
}

TEST_CASE("vacuum trace rows are identical") {
  const RingConfig vac(2, std::vector<SiteState>(8, 0));
  const auto rows = trace_rows(vac, 2, TraceStyle::Symbolic);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r == "........");
}

TEST_CASE("trace header carries tau and length") {
  const RingConfig vac(3, std::vector<SiteState>(6, 0));
  const std::string text = format_trace(vac, 1, TraceStyle::Numeric);
  CHECK(text.rfind("tau=3 L=6\n", 0) == 0);
}
