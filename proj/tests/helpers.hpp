#pragma once
// Shared test utilities: seeded random admissible rings and an independent
// oracle for the single-species parallel-update traffic rule.

#include "latgas/ring.hpp"

#include <random>
#include <vector>

namespace testutil {

using latgas::RingConfig;
using latgas::SiteState;

// Random admissible ring. Mixes free particles (states +-1) with planted
// in-progress short pairs (states 2..tau) and long pairs (2..tau+1); any
// arrangement of +-1 and vacancies is admissible, so only planted pairs need
// structural care.
inline RingConfig random_ring(std::mt19937_64& rng, int L, int tau) {
  std::vector<SiteState> cells(L, 0);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> short_state(2, std::max(2, tau));
  std::uniform_int_distribution<int> long_state(2, tau + 1);
  int i = 0;
  while (i < L) {
    const int k = kind(rng);
    if (k < 4) { // vacancy
      ++i;
    } else if (k < 6) {
      cells[i++] = 1;
    } else if (k < 8) {
      cells[i++] = -1;
    } else if (k == 8 && tau >= 2 && i + 2 < L) { // short pair + trailing vacancy
      const SiteState s = static_cast<SiteState>(short_state(rng));
      cells[i] = s;
      cells[i + 1] = static_cast<SiteState>(-s);
      i += 3;
    } else if (k == 9 && i + 3 < L) { // long pair + trailing vacancy
      const SiteState s = static_cast<SiteState>(long_state(rng));
      cells[i] = s;
      cells[i + 1] = 0;
      cells[i + 2] = static_cast<SiteState>(-s);
      i += 4;
    } else {
      ++i;
    }
  }
  // Keep the wrap clean: a planted pair never touches site 0 because pairs
  // leave a trailing vacancy and start at i >= 0 with room; site L-1 may hold
  // a +-1 or vacancy only.
  if (std::abs(cells[L - 1]) > 1) cells[L - 1] = 0;
  return RingConfig(tau, std::move(cells));
}

// Deterministic single-species traffic rule with unit speed: a car advances
// iff the next site is empty, all cars simultaneously.
inline std::vector<int> nasch_step(const std::vector<int>& cars) {
  const int L = static_cast<int>(cars.size());
  std::vector<int> next(L, 0);
  for (int i = 0; i < L; ++i) {
    if (cars[i] == 0) continue;
    if (cars[(i + 1) % L] == 0) {
      next[(i + 1) % L] = 1;
    } else {
      next[i] = 1;
    }
  }
  return next;
}

} // namespace testutil
