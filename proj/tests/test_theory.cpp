#include "latgas/theory.hpp"

#include "latgas/clusters.hpp"
#include "latgas/dynamics.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace latgas;

TEST_CASE("region labels") {
  CHECK(classify_region(Rat(3, 8), Rat(1, 4), 2).region == Region::H);
  CHECK(classify_region(Rat(0), Rat(0), 2).region == Region::A);
  CHECK(classify_region(Rat(0), Rat(0), 5).region == Region::A);
  CHECK(classify_region(Rat(1, 2), Rat(1, 10), 2).region == Region::C);
  CHECK(classify_region(Rat(1, 10), Rat(1, 2), 2).region == Region::B);
  CHECK(classify_region(Rat(4, 17), Rat(2, 17), 2).region == Region::A);
}

TEST_CASE("boundary lines are detected exactly") {
  // (tau+2) rho = 1 + (tau-1) rho~ at tau=2: 4 rho = 1 + rho~.
  CHECK(classify_region(Rat(2, 7), Rat(1, 7), 2).region == Region::Boundary);
  CHECK(classify_region(Rat(2, 7), Rat(1, 7), 2).boundary_line == 2);
  // (tau+1) rho = 1 + (tau-1) rho~: 3 rho = 1 + rho~.
  CHECK(classify_region(Rat(2, 5), Rat(1, 5), 2).boundary_line == 1);
}

TEST_CASE("monotone region order when rho grows at fixed rho~") {
  const int tau = 2;
  const Rat rhot(1, 10);
  // A (or boundary) -> H -> C, never skipping H.
  int last_stage = 0; // 0=A,1=H,2=C
  for (int num = 0; num <= 80; ++num) {
    const Rat rho(num, 100);
    if (rho + rhot > Rat(1)) break;
    const RegionLabel l = classify_region(rho, rhot, tau);
    int stage = last_stage;
    if (l.region == Region::A) stage = 0;
    if (l.region == Region::H) stage = 1;
    if (l.region == Region::C) stage = 2;
    CHECK(stage >= last_stage);
    last_stage = stage;
  }
  CHECK(last_stage == 2);
}

TEST_CASE("predicted velocities by region") {
  const VelocityPrediction a = predicted_velocities(Rat(1, 20), Rat(1, 20), 2);
  REQUIRE(a.v);
  CHECK(*a.v == Rat(10, 11));
  CHECK(*a.vt == Rat(10, 11));
  const VelocityPrediction c = predicted_velocities(Rat(1, 2), Rat(1, 10), 2);
  REQUIRE(c.v);
  CHECK(*c.v == Rat(1, 2));
  CHECK(*c.vt == Rat(1, 2));
  const VelocityPrediction h = predicted_velocities(Rat(3, 8), Rat(1, 4), 2);
  CHECK(!h.v);
  CHECK(!h.vt);
  const VelocityPrediction b = predicted_velocities(Rat(1, 20), Rat(9, 20), 2);
  REQUIRE(b.v);
  CHECK(*b.v == Rat(1, 2));
  CHECK(*b.vt == Rat(11, 18));
}

TEST_CASE("tau=1 free region has unit velocities") {
  const VelocityPrediction a = predicted_velocities(Rat(1, 5), Rat(1, 5), 1);
  REQUIRE(a.v);
  CHECK(*a.v == Rat(1));
  CHECK(*a.vt == Rat(1));
}

TEST_CASE("critical densities") {
  auto [c0, c0p] = critical_densities(Rat(0), 2);
  CHECK(c0 == Rat(1, 4));
  CHECK(c0p == Rat(1, 3));
  auto [c1, c1p] = critical_densities(Rat(1, 4), 2);
  CHECK(c1 == Rat(5, 16));
  CHECK(c1p == Rat(5, 12));
  auto [c2, c2p] = critical_densities(Rat(1, 4), 1);
  CHECK(c2 == Rat(1, 3));
  CHECK(c2p == Rat(1, 2));
  CHECK(c1 < c1p);
}

TEST_CASE("interval flags") {
  const IntervalFlags degenerate =
      classify_interval({Rat(0), Rat(0), Rat(0), Rat(0)}, 2);
  CHECK(degenerate.free_pos);
  CHECK(degenerate.free_neg);
  CHECK(!degenerate.jam_pos);
  const IntervalFlags low =
      classify_interval({Rat(1, 20), Rat(1, 10), Rat(0), Rat(1, 20)}, 2);
  CHECK(low.free_pos);
  const IntervalFlags high =
      classify_interval({Rat(1, 2), Rat(3, 5), Rat(0), Rat(1, 20)}, 2);
  CHECK(high.jam_pos);
  CHECK_THROWS_AS(classify_interval({Rat(1, 2), Rat(1, 4), Rat(0), Rat(0)}, 2),
                  std::invalid_argument);
}

TEST_CASE("free1 family construction") {
  FamilySpec s;
  s.family = Family::Free1;
  s.tau = 2;
  s.ks = {0};
  s.m = 1;
  CHECK(gen_family(s).cells == std::vector<SiteState>{1, 0, 0, 1, -1});
  const DensityPair d = family_densities(s);
  CHECK(d.rho == Rat(2, 5));
  CHECK(d.rho_tilde == Rat(1, 5));

  FamilySpec big;
  big.family = Family::Free1;
  big.tau = 2;
  big.ks = {1, 0};
  big.m = 4;
  const RingConfig cfg = gen_family(big);
  CHECK(cfg.length() == 16);
  const DensityPair db = family_densities(big);
  CHECK(db.rho == Rat(3, 8));
  CHECK(db.rho_tilde == Rat(1, 4));
  CHECK(densities(cfg).rho == db.rho);
  CHECK(densities(cfg).rho_tilde == db.rho_tilde);
}

TEST_CASE("free2 family construction") {
  FamilySpec s;
  s.family = Family::Free2;
  s.tau = 2;
  s.ks = {0};
  s.m = 1;
  CHECK(gen_family(s).cells == std::vector<SiteState>{1, 0, 0, 0, 1, 0, -1});
  const DensityPair d = family_densities(s);
  CHECK(d.rho == Rat(2, 7));
  CHECK(d.rho_tilde == Rat(1, 7));
}

TEST_CASE("family densities match generated counts for many specs") {
  for (int tau : {1, 2, 3}) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        if (n + m < 1) continue;
        for (Family fam : {Family::Free1, Family::Free2}) {
          FamilySpec s;
          s.family = fam;
          s.tau = tau;
          s.m = m;
          s.ks.assign(n, 1);
          if (s.period() < kMinRingLength) continue;
          const RingConfig cfg = gen_family(s);
          const DensityPair want = family_densities(s);
          CHECK(densities(cfg).rho == want.rho);
          CHECK(densities(cfg).rho_tilde == want.rho_tilde);
        }
      }
    }
  }
}

TEST_CASE("lone-positive family density") {
  FamilySpec s;
  s.family = Family::Free1;
  s.tau = 2;
  s.ks = {1}; // single spacer block, padded to reach the minimum length
  s.m = 0;
  const DensityPair d = family_densities(s);
  CHECK(d.rho == Rat(1, 5));
  CHECK(d.rho_tilde == Rat(0));
}

TEST_CASE("family boundary identities at N=0") {
  for (int tau : {1, 2, 3, 5}) {
    FamilySpec f1;
    f1.family = Family::Free1;
    f1.tau = tau;
    f1.ks = {0, 0, 0};
    f1.m = 2;
    const DensityPair d1 = family_densities(f1);
    CHECK(Rat(tau + 1) * d1.rho == Rat(1) + Rat(tau - 1) * d1.rho_tilde);
    FamilySpec f2;
    f2.family = Family::Free2;
    f2.tau = tau;
    f2.ks = {0, 0, 0};
    f2.m = 2;
    const DensityPair d2 = family_densities(f2);
    CHECK(Rat(tau + 2) * d2.rho == Rat(1) + Rat(tau - 1) * d2.rho_tilde);
  }
}

TEST_CASE("family members stay free from the start") {
  for (Family fam : {Family::Free1, Family::Free2}) {
    FamilySpec s;
    s.family = fam;
    s.tau = 2;
    s.ks = {1, 0};
    s.m = 2;
    const RingConfig cfg = gen_family(s);
    const CycleReport rep = detect_cycle(cfg);
    Stepper st(cfg);
    for (long long t = 0; t < rep.transient + rep.rel_period; ++t) {
      st.advance();
      for (const auto& e : st.events()) REQUIRE(e.type != EventType::SimpleBlock);
    }
  }
}

TEST_CASE("tracer velocity branches") {
  CHECK(*tracer_velocity(Rat(3, 5), 2, TracerDirection::Against) == Rat(1, 2));
  CHECK(*tracer_velocity(Rat(1, 10), 2, TracerDirection::Against) == Rat(9, 11));
  CHECK(!tracer_velocity(Rat(7, 24), 2, TracerDirection::Against)); // inside the window
  CHECK(*tracer_velocity(Rat(1, 4), 2, TracerDirection::With) == Rat(1));
  CHECK(*tracer_velocity(Rat(3, 4), 2, TracerDirection::With) == Rat(1, 3));
  CHECK(*tracer_velocity(Rat(1), 2, TracerDirection::With) == Rat(0));
}

TEST_CASE("classifier throws outside the triangle") {
  CHECK_THROWS_AS(classify_region(Rat(3, 4), Rat(1, 2), 2), std::domain_error);
}

TEST_CASE("family formula degenerate instances") {
  // The printed three-block instance: densities follow the formula, not the
  // row it was printed next to.
  FamilySpec s;
  s.family = Family::Free1;
  s.tau = 2;
  s.ks = {3, 0, 0};
  s.m = 2;
  const DensityPair d = family_densities(s);
  CHECK(d.rho == Rat(5, 19));
  CHECK(d.rho_tilde == Rat(2, 19));
  // A single bare spacer block would be shorter than the minimum ring.
  FamilySpec tiny;
  tiny.family = Family::Free1;
  tiny.tau = 2;
  tiny.ks = {0};
  tiny.m = 0;
  CHECK(family_densities(tiny).rho == Rat(1, 3));
  CHECK_THROWS_AS(gen_family(tiny), std::invalid_argument);
}
