#pragma once
// Ring configurations of the bidirectional lattice gas.
//
// A cell holds a signed state: positive values are right-moving particles,
// negative values left-moving ones, zero is a vacancy. Magnitudes above 1
// encode the progress of an opposite-sign interaction: a short interaction
// (adjacent pair) runs through states 2..tau, a long interaction (pair
// separated by one vacancy) through 2..tau+1. Admissibility ties every such
// state to a matching partner of opposite sign and equal magnitude.

#include <cstdint>
#include <string>
#include <vector>

namespace latgas {

using SiteState = std::int8_t; // sign = species, magnitude = interaction progress

// Shorter rings can pair a particle with the same partner on both sides
// across the wrap; they are rejected everywhere.
inline constexpr int kMinRingLength = 5;

struct RingConfig {
  int tau = 1;
  std::vector<SiteState> cells;

  RingConfig() = default;
  // Validates tau >= 1, length >= kMinRingLength and |state| <= tau+1.
  RingConfig(int tau, std::vector<SiteState> cells);

  int length() const { return static_cast<int>(cells.size()); }
  int mod(long long i) const {
    const int L = length();
    int r = static_cast<int>(i % L);
    return r < 0 ? r + L : r;
  }
  SiteState at(long long i) const { return cells[mod(i)]; }

  int count_positive() const;
  int count_negative() const;

  bool operator==(const RingConfig&) const = default;
};

enum class ViolationKind {
  StateOutOfRange,  // |state| > tau+1
  MissingPartner,   // interacting state without matching opposite state
  MaxStateNotLong,  // state tau+1 must sit in a long interaction
};

struct Violation {
  int site = 0;
  ViolationKind kind = ViolationKind::MissingPartner;
  std::string detail;
};

// Diagnostic check; empty result means admissible. Indices of the returned
// violations point at the cell whose state imposes the failing condition.
std::vector<Violation> check_admissible(const RingConfig& cfg);
bool is_admissible(const RingConfig& cfg);

const char* to_string(ViolationKind k);

} // namespace latgas
