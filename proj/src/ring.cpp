#include "latgas/ring.hpp"

#include <cstdlib>
#include <stdexcept>

namespace latgas {

RingConfig::RingConfig(int tau_, std::vector<SiteState> cells_)
    : tau(tau_), cells(std::move(cells_)) {
  if (tau < 1) throw std::invalid_argument("tau must be >= 1");
  if (length() < kMinRingLength)
    throw std::invalid_argument("ring length must be >= " + std::to_string(kMinRingLength));
  for (int i = 0; i < length(); ++i) {
    if (std::abs(cells[i]) > tau + 1)
      throw std::invalid_argument("state at site " + std::to_string(i) +
                                  " exceeds tau+1");
  }
}

int RingConfig::count_positive() const {
  int n = 0;
  for (SiteState s : cells) n += (s > 0);
  return n;
}

int RingConfig::count_negative() const {
  int n = 0;
  for (SiteState s : cells) n += (s < 0);
  return n;
}

std::vector<Violation> check_admissible(const RingConfig& cfg) {
  std::vector<Violation> out;
  const int L = cfg.length();
  for (int i = 0; i < L; ++i) {
    const int s = cfg.cells[i];
    if (std::abs(s) > cfg.tau + 1) {
      out.push_back({i, ViolationKind::StateOutOfRange, "state out of range"});
      continue;
    }
    if (s > 1) {
      const int r1 = cfg.at(i + 1), r2 = cfg.at(i + 2);
      if (s == cfg.tau + 1) {
        if (!(r1 == 0 && r2 == -s))
          out.push_back({i, ViolationKind::MaxStateNotLong,
                         "state tau+1 requires a vacancy then the opposite partner"});
      } else if (!(r1 == -s || (r1 == 0 && r2 == -s))) {
        out.push_back({i, ViolationKind::MissingPartner,
                       "interacting state lacks matching partner to the right"});
      }
    } else if (s < -1) {
      const int l1 = cfg.at(i - 1), l2 = cfg.at(i - 2);
      if (s == -(cfg.tau + 1)) {
        if (!(l1 == 0 && l2 == -s))
          out.push_back({i, ViolationKind::MaxStateNotLong,
                         "state -(tau+1) requires a vacancy then the opposite partner"});
      } else if (!(l1 == -s || (l1 == 0 && l2 == -s))) {
        out.push_back({i, ViolationKind::MissingPartner,
                       "interacting state lacks matching partner to the left"});
      }
    }
  }
  return out;
}

bool is_admissible(const RingConfig& cfg) { return check_admissible(cfg).empty(); }

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::StateOutOfRange: return "state-out-of-range";
    case ViolationKind::MissingPartner: return "missing-partner";
    case ViolationKind::MaxStateNotLong: return "max-state-not-long";
  }
  return "?";
}

} // namespace latgas
