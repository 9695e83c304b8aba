#include "latgas/dynamics.hpp"

#include "latgas/builtin_traces.hpp"
#include "latgas/formats.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace latgas;

namespace {

RingConfig ring17() {
  return RingConfig(2, {1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, -1});
}

} // namespace

TEST_CASE("one step of the 17-site ring") {
  const StepOutcome out = step(ring17());
  CHECK(out.next.cells ==
        std::vector<SiteState>{0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 1, 0, 1, 0, -1, 0});
}

TEST_CASE("row three to row four exercises both swap kinds") {
  const RingConfig t3(2, {0, 0, 0, 1, 0, 2, -2, 0, 0, 0, 0, 0, 1, 3, 0, -3, 0});
  const StepOutcome out = step(t3);
  CHECK(out.next.cells ==
        std::vector<SiteState>{0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0, 0, 1, -1, 0, 1, 0});
  int short_swaps = 0, long_swaps = 0;
  for (const auto& e : out.events) {
    short_swaps += e.type == EventType::ShortSwap;
    long_swaps += e.type == EventType::LongSwap;
  }
  CHECK(short_swaps == 1);
  CHECK(long_swaps == 1);
}

TEST_CASE("free motion of a single positive") {
  const RingConfig cfg(2, {1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(step(cfg).next.cells == std::vector<SiteState>{0, 1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("golden traces replay byte-for-byte") {
  for (const GoldenTrace& g : golden_traces()) {
    CAPTURE(g.name);
    const ParseResult seed = parse_config(g.rows.front(), g.tau);
    REQUIRE(seed.violations.empty());
    const auto rows =
        trace_rows(seed.config, static_cast<long long>(g.rows.size()) - 1, g.style);
    REQUIRE(rows.size() == g.rows.size());
    for (size_t t = 0; t < rows.size(); ++t) {
      CAPTURE(t);
      CHECK(rows[t] == g.rows[t]);
    }
  }
}

TEST_CASE("evolve matches the printed later rows") {
  CHECK(evolve(ring17(), 15).cells ==
        std::vector<SiteState>{0, 0, 0, 0, 1, 0, -1, 1, 0, 0, 0, 0, 1, 0, 3, 0, -3});
  CHECK(evolve(RingConfig(2, {1, 0, 0, 0, 1, -1, 1, -1}), 11).cells ==
        std::vector<SiteState>{1, 2, -2, 0, 0, 1, 0, -1});
  const RingConfig cfg = ring17();
  CHECK(evolve(cfg, 0) == cfg);
}

TEST_CASE("reflect_dual basics") {
  CHECK(reflect_dual(RingConfig(1, {1, 0, -1, 0, 0})).cells ==
        std::vector<SiteState>{0, 0, 1, 0, -1});
  // An involution.
  const RingConfig cfg = ring17();
  CHECK(reflect_dual(reflect_dual(cfg)) == cfg);
  // Palindromic pattern maps to itself.
  const RingConfig pal(2, {1, 0, 0, 0, -1});
  CHECK(reflect_dual(pal) == pal);
}

TEST_CASE("duality commutes with the step map on the 17-site ring") {
  const RingConfig cfg = ring17();
  CHECK(step(reflect_dual(cfg)).next == reflect_dual(step(cfg).next));
}

TEST_CASE("step rejects inadmissible input") {
  RingConfig bad(2, {2, 0, 0, 0, 0});
  CHECK_THROWS_AS(step(bad), std::invalid_argument);
}

TEST_CASE("conservation, closure and duality on a random corpus") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len(5, 48), taud(1, 5);
    const int tau = taud(rng);
    const RingConfig cfg = testutil::random_ring(rng, len(rng), tau);
    REQUIRE(is_admissible(cfg));
    const int np = cfg.count_positive(), nn = cfg.count_negative();
    Stepper st(cfg);
    Stepper dual(reflect_dual(cfg));
    for (int t = 0; t < 60; ++t) {
      st.advance();
      dual.advance();
      const RingConfig cur = st.config();
      REQUIRE(is_admissible(cur));
      REQUIRE(cur.count_positive() == np);
      REQUIRE(cur.count_negative() == nn);
      REQUIRE(reflect_dual(cur) == dual.config());
    }
  }
}

TEST_CASE("single-species dynamics matches the unit-speed traffic rule") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(5, 40), taud(1, 5);
    const int L = len(rng), tau = taud(rng);
    std::vector<SiteState> cells(L, 0);
    std::vector<int> cars(L, 0);
    std::uniform_int_distribution<int> fill(0, 2);
    for (int i = 0; i < L; ++i) {
      if (fill(rng) == 0) {
        cells[i] = 1;
        cars[i] = 1;
      }
    }
    Stepper st(RingConfig(tau, cells));
    for (int t = 0; t < 40; ++t) {
      st.advance();
      cars = testutil::nasch_step(cars);
      for (int i = 0; i < L; ++i) REQUIRE(static_cast<int>(st.cells()[i]) == cars[i]);
    }
  }
}

TEST_CASE("tau=1 short encounters exchange in a single step") {
  // 1 -1 with tau=1: the positive passes the negative without delay.
  const RingConfig cfg(1, {0, 1, -1, 0, 0});
  const StepOutcome out = step(cfg);
  CHECK(out.next.cells == std::vector<SiteState>{0, -1, 1, 0, 0});
  bool saw_start = false, saw_swap = false;
  for (const auto& e : out.events) {
    saw_start |= e.type == EventType::ShortStart;
    saw_swap |= e.type == EventType::ShortSwap;
  }
  CHECK(saw_start);
  CHECK(saw_swap);
}

TEST_CASE("tau=1 long encounters still take tau+1 steps") {
  RingConfig cfg(1, {1, 0, -1, 0, 0});
  const StepOutcome s1 = step(cfg);
  CHECK(s1.next.cells == std::vector<SiteState>{2, 0, -2, 0, 0});
  const StepOutcome s2 = step(s1.next);
  CHECK(s2.next.cells == std::vector<SiteState>{-1, 0, 1, 0, 0});
}

TEST_CASE("long start freezes both particles instead of taking the vacancy") {
  const RingConfig cfg(2, {1, 0, -1, 0, 0});
  const StepOutcome out = step(cfg);
  CHECK(out.next.cells == std::vector<SiteState>{2, 0, -2, 0, 0});
}

TEST_CASE("simple blocks carry the blocked species") {
  const RingConfig cfg(2, {1, 1, 0, -1, -1});
  const StepOutcome out = step(cfg);
  int pos_blocks = 0, neg_blocks = 0;
  for (const auto& e : out.events) {
    if (e.type != EventType::SimpleBlock) continue;
    (e.partner > 0 ? pos_blocks : neg_blocks) += 1;
  }
  CHECK(pos_blocks == 1);
  CHECK(neg_blocks == 1);
}
