#pragma once
// Particle identity across exchanges, exact cycle detection and exact
// observables. Identity is bound to the particle, not the site: a completed
// short exchange carries the positive one site right and the negative one
// site left, a long exchange two sites across the middle vacancy.
//
// Cycle detection hashes the minimal rotation of each visited state, so a
// recurrence is found after the relative period p (state repeats up to a ring
// rotation by `shift`). The minimal exact period divides p times the order of
// that rotation and is reconstructed arithmetically. Exact velocities come
// from the summed unwrapped displacement of a species over one relative
// period: rotations commute with the dynamics, so the per-period sum repeats
// forever.

#include "latgas/dynamics.hpp"
#include "latgas/rational.hpp"
#include "latgas/ring.hpp"

#include <optional>
#include <vector>

namespace latgas {

struct DensityPair {
  Rat rho;       // positives / L
  Rat rho_tilde; // negatives / L
};

DensityPair densities(const RingConfig& cfg);

// ---------------------------------------------------------------- tracker

class Tracker {
 public:
  explicit Tracker(const RingConfig& cfg); // ids assigned left to right at t=0

  void apply(const std::vector<StepEvent>& events, int L);

  int particle_count() const { return static_cast<int>(sign_.size()); }
  int sign(int id) const { return sign_[id]; }
  long long unwrapped(int id) const { return unwrapped_[id]; }
  int ring_site(int id) const { return site_[id]; }
  int id_at(int site) const { return id_at_site_[site]; } // -1 if vacant
  const std::vector<long long>& positions() const { return unwrapped_; }

 private:
  void move(int from, int to, int delta);
  std::vector<int> id_at_site_;
  std::vector<int> site_;
  std::vector<long long> unwrapped_;
  std::vector<int> sign_;
};

struct ParticleTrack {
  int id = 0;
  int sign = 0;
  std::vector<long long> unwrapped; // positions for t = 0..horizon
};

// Positions of every particle over [0, horizon]. Rejects horizon < 0.
std::vector<ParticleTrack> track(const RingConfig& cfg, long long horizon);

// ---------------------------------------------------------- cycle reports

struct SpeciesCycleStats {
  int count = 0;          // particles of the species
  long long sum_disp = 0; // summed unwrapped displacement over one relative period
  int slot_shift = 0;     // cyclic slot permutation induced by one exact period
  bool uniform = false;   // every particle displaces equally over one exact period
  long long disp_exact = 0; // per-particle displacement over one exact period (uniform only)
};

struct CycleReport {
  long long transient = 0;  // minimal t0
  long long rel_period = 0; // minimal p with x^(t0+p) = rotate(x^t0)
  int shift = 0;            // x^(t0+p)[i] = x^t0[(i+shift) mod L]
  long long period = 0;     // minimal exact period P
  SpeciesCycleStats pos, neg;

  std::optional<Rat> velocity_pos() const; // sum_disp / (count * rel_period)
  std::optional<Rat> velocity_neg() const; // magnitude
};

struct CycleOptions {
  long long max_steps = -1;        // default: 1e6 * L
  std::size_t hash_entry_cap = 1 << 20; // beyond this, constant-memory fallback
};

// Always terminates within the state-count bound; throws std::runtime_error
// only if max_steps is exhausted first.
CycleReport detect_cycle(const RingConfig& cfg, const CycleOptions& opt = {});

struct VelocityPair {
  std::optional<Rat> v_pos; // absent when the species is empty
  std::optional<Rat> v_neg; // magnitude of the negative-species velocity
};

// Exact limit velocities; asserts that every particle of a species attains
// the same long-run value.
VelocityPair average_velocity(const RingConfig& cfg, const CycleOptions& opt = {});

// --------------------------------------------------------------- pair gaps

struct PairGapReport {
  int rear_id = 0, lead_id = 0;
  long long initial_gap = 0;       // sites strictly between the pair at t=0
  long long initial_separation = 0; // lead - rear distance at t=0 (gap + 1)
  long long max_gap = 0, min_gap = 0;
};

// Consecutive same-sign pairs (ring-cyclic, both species); gap extremes over
// [0, horizon]. Gaps are measured in the species' direction of motion.
std::vector<PairGapReport> pair_gaps(const RingConfig& cfg, long long horizon);

// Gap extremes over the entire cycle (all t >= 0): per pair, the supremum is
// taken over the pair's orbit under the exact-period slot permutation.
std::vector<PairGapReport> pair_gaps_cycle(const RingConfig& cfg, const CycleOptions& opt = {});

} // namespace latgas
