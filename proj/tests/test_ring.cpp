#include "latgas/ring.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace latgas;

TEST_CASE("admissible pattern with a long pair") {
  // 1 1 0 -1 0 1 -1 0 0 0 2 0 -2 0 0 : one mid-flight long interaction.
  RingConfig cfg(2, {1, 1, 0, -1, 0, 1, -1, 0, 0, 0, 2, 0, -2, 0, 0});
  CHECK(check_admissible(cfg).empty());
}

TEST_CASE("long pair with mismatched magnitudes is rejected") {
  RingConfig cfg(2, {1, 1, 0, -1, 0, 1, -1, 0, 0, 0, 2, 0, -1, 0, 0});
  const auto v = check_admissible(cfg);
  REQUIRE(v.size() == 1);
  CHECK(v[0].site == 10); // the orphaned state-2 particle
  CHECK(v[0].kind == ViolationKind::MissingPartner);
}

TEST_CASE("all-vacancy ring is admissible") {
  RingConfig cfg(2, std::vector<SiteState>(8, 0));
  CHECK(is_admissible(cfg));
}

TEST_CASE("state tau+1 must sit in a long interaction") {
  RingConfig bad(2, {3, -3, 0, 0, 0});
  const auto v = check_admissible(bad);
  CHECK(!v.empty());
  CHECK(v[0].kind == ViolationKind::MaxStateNotLong);
  RingConfig good(2, {3, 0, -3, 0, 0});
  CHECK(is_admissible(good));
}

TEST_CASE("mirror conditions for negative states") {
  CHECK(is_admissible(RingConfig(2, {-2, 0, 0, 0, 2})));  // short pair over the wrap
  CHECK(!is_admissible(RingConfig(2, {-2, 0, 0, 0, 1}))); // partner magnitude wrong
}

TEST_CASE("constructor rejects bad inputs") {
  CHECK_THROWS_AS(RingConfig(2, {1, 0, 0, 0}), std::invalid_argument);       // short ring
  CHECK_THROWS_AS(RingConfig(2, {4, 0, -4, 0, 0}), std::invalid_argument);   // |s| > tau+1
  CHECK_THROWS_AS(RingConfig(0, {1, 0, 0, 0, 0}), std::invalid_argument);    // tau < 1
}

TEST_CASE("counts") {
  RingConfig cfg(2, {1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, -1});
  CHECK(cfg.count_positive() == 4);
  CHECK(cfg.count_negative() == 2);
}
