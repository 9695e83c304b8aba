#pragma once
// The deterministic one-step map. Three phases, all reading the time-t state
// and writing time-t+1; a site written by an earlier phase is never rewritten.
//
//  1. interacting pairs advance their states by one; a short pair whose state
//     would exceed tau (long pair: tau+1) exchanges positions instead, both
//     particles returning to state +-1;
//  2. positives at state 1 move into a vacancy, or freeze into state 2
//     against a -1 at distance one (short) or across one vacancy (long);
//     a positive blocked by a positive keeps its state;
//  3. the -1 particles not consumed by phase 2 move left into a vacancy.
//
// With tau = 1 a freshly started short interaction would already be past its
// threshold, so the exchange completes within the same step; this keeps every
// encounter delay equal to tau and preserves admissibility.

#include "latgas/ring.hpp"

namespace latgas {

enum class EventType {
  Moved,       // free move; site -> partner
  ShortStart,  // positive at site froze against -1 at partner
  LongStart,   // positive at site froze against -1 across a vacancy
  ShortSwap,   // exchange completed; positive site -> partner, negative partner -> site
  LongSwap,    // exchange across the middle vacancy
  SimpleBlock, // particle at site blocked by one of its own sign; partner = its sign
  Wait,        // interacting pair advanced its state; site = positive, partner = negative
};

struct StepEvent {
  EventType type;
  int site = -1;
  int partner = -1;
};

struct StepOutcome {
  RingConfig next;
  std::vector<StepEvent> events;
};

// Rejects inadmissible input (std::invalid_argument).
StepOutcome step(const RingConfig& cfg);

// t-fold composition of the step map; validates admissibility once up front.
RingConfig evolve(RingConfig cfg, long long t);

// Spatial reflection composed with sign negation: out[i] = -in[L-1-i].
// An involution that commutes with the step map and swaps the species.
RingConfig reflect_dual(const RingConfig& cfg);

// Reusable stepper that avoids per-step allocation. `cells` always holds the
// current state; admissibility of the seed is the caller's responsibility
// (the step map preserves it).
class Stepper {
 public:
  explicit Stepper(const RingConfig& cfg);

  void advance();                      // one step, events available via events()
  const std::vector<SiteState>& cells() const { return cur_; }
  const std::vector<StepEvent>& events() const { return events_; }
  int tau() const { return tau_; }
  int length() const { return L_; }
  RingConfig config() const { return RingConfig(tau_, cur_); }

 private:
  int tau_;
  int L_;
  std::vector<SiteState> cur_, nxt_;
  std::vector<std::uint8_t> handled_;
  std::vector<StepEvent> events_;
};

} // namespace latgas
