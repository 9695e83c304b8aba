#pragma once
// Closed-form predictions on the density triangle {rho, rho_tilde >= 0,
// rho + rho_tilde <= 1}, and the constructive free-flow families.
//
// Four lines partition the triangle:
//   1: (tau+1) rho  = 1 + (tau-1) rho~       3: (tau+1) rho~ = 1 + (tau-1) rho
//   2: (tau+2) rho  = 1 + (tau-1) rho~       4: (tau+2) rho~ = 1 + (tau-1) rho
// A sits below lines 2 and 4, B above line 3 and below 2, C mirrored, H is
// the rest. Velocities are predicted in A, B and C only.

#include "latgas/rational.hpp"
#include "latgas/ring.hpp"
#include "latgas/tracking.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace latgas {

enum class Region { A, B, C, H, Boundary };

struct RegionLabel {
  Region region = Region::H;
  int boundary_line = 0; // 1..4 when region == Boundary
};

const char* to_string(Region r);

// Exact rational comparisons; throws std::domain_error outside the triangle.
RegionLabel classify_region(const Rat& rho, const Rat& rho_tilde, int tau);

struct VelocityPrediction {
  std::optional<Rat> v;  // absent: unpredicted (H or boundary)
  std::optional<Rat> vt; // magnitude of the negative-species velocity
};

VelocityPrediction predicted_velocities(const Rat& rho, const Rat& rho_tilde, int tau);

// (rho_c, rho_c') = ((1 + rho~ (tau-1)) / (tau+2), (1 + rho~ (tau-1)) / (tau+1)).
std::pair<Rat, Rat> critical_densities(const Rat& rho_tilde, int tau);

struct DensityInterval {
  Rat rho_lo, rho_hi;   // lower/upper density of positives
  Rat rhot_lo, rhot_hi; // lower/upper density of negatives
};

struct IntervalFlags {
  bool free_pos = false; // (tau+2) rho_hi  < 1 + (tau-1) rhot_lo
  bool free_neg = false; // (tau+2) rhot_hi < 1 + (tau-1) rho_lo
  bool jam_pos = false;  // (tau+1) rho_lo  > 1 + (tau-1) rhot_hi
  bool jam_neg = false;  // (tau+1) rhot_lo > 1 + (tau-1) rho_hi
};

IntervalFlags classify_interval(const DensityInterval& di, int tau);

// ------------------------------------------------------------ families

enum class Family { Free1, Free2 };

// Free1 lays out n blocks "+ followed by tau+2k_i vacancies" then m blocks
// "+-"; only short interactions ever occur. Free2 uses "tau+1+2k_i vacancies"
// and "+.-" blocks, forcing long interactions. Block layout fixes the ring
// length at (tau+1)n + 2(m+N) resp. (tau+2)n + 3m + 2N with N = sum k_i.
struct FamilySpec {
  Family family = Family::Free1;
  int tau = 1;
  std::vector<int> ks; // one entry per spacer block, each >= 0
  int m = 0;           // number of trailing pair/triple blocks

  int n() const { return static_cast<int>(ks.size()); }
  int N() const;
  int period() const;
};

RingConfig gen_family(const FamilySpec& spec);   // throws if period < minimum length
DensityPair family_densities(const FamilySpec& spec);

// ---------------------------------------------------------- active tracer

enum class TracerDirection { With, Against };

// Limit velocity of a single particle inserted into a single-species flow of
// density rho. Against the flow: (1-(tau-1)rho)/(1+(tau-1)rho) below
// 1/(tau+2), 1/tau above 1/(tau+1), undefined (nullopt) in the hysteresis
// window between. With the flow: 1 up to 1/2, then (1-rho)/rho.
std::optional<Rat> tracer_velocity(const Rat& rho, int tau, TracerDirection dir);

} // namespace latgas
