#pragma once
// Grid sweeps over the density triangle, tracer experiments and the
// only-trivial-clusters search. Rows come back in deterministic grid order
// regardless of how many workers ran them.

#include "latgas/clusters.hpp"
#include "latgas/rational.hpp"
#include "latgas/ring.hpp"
#include "latgas/theory.hpp"
#include "latgas/tracking.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgas {

// Round-robin placement of each species, all states +-1; the negative comb
// is offset by half a slot and probes forward past occupied sites.
RingConfig even_ring(int tau, int L, int n_pos, int n_neg);

struct SweepSpec {
  std::vector<int> taus{2};
  std::vector<int> lengths{34};
  int grid = 17;                // density resolution: targets i/grid
  long long horizon_cap = -1;   // step budget per point; -1: 1e6 * L
  unsigned seed = 1;            // reserved for randomized placements
  int threads = 0;              // 0: hardware concurrency
};

struct SweepRow {
  int tau = 0, L = 0, n_pos = 0, n_neg = 0;
  Rat rho, rho_tilde;
  std::string region;
  std::optional<Rat> v_measured, vt_measured;
  std::optional<Rat> v_predicted, vt_predicted;
  long long transient = -1, period = -1;
  std::string flags;

  std::string csv() const;
  static std::string csv_header();
};

// Measured cycle velocities vs closed-form predictions per grid point.
std::vector<SweepRow> sweep_fundamental(const SweepSpec& spec);

// Same grid plus simulated phase flags and an agreement column.
std::vector<SweepRow> sweep_phase(const SweepSpec& spec);

void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

// ----------------------------------------------------------------- tracer

struct TracerResult {
  int tau = 0, L = 0;
  TracerDirection direction = TracerDirection::Against;
  Rat flow_density;
  Rat measured;                 // tracer's exact cycle velocity (magnitude)
  std::optional<Rat> predicted; // limit curve; absent in the gap window
  std::string note;
};

// Against the flow: one positive tracer plus rho*L negatives. With the flow:
// rho*L positives, the tracer being one of them. rho*L must be integral.
TracerResult run_tracer(const Rat& rho, int tau, TracerDirection dir, int L);

// -------------------------------------------------------- hypothesis scan

struct ScanFinding {
  int L = 0, n_pos = 0, n_neg = 0;
  Rat rho, rho_tilde;
  std::string config;   // numeric text of the witness
  std::string seed_kind; // family | replicated | enumerated | random
  long long transient = 0, rel_period = 0;
  int n_trivial = 0;    // trivial clusters on the cycle window
};

struct ScanSpec {
  int L_max = 24;
  int tau = 2;
  long long horizon = -1;
  unsigned seed = 1;
  int tries = 400;       // random seeds per class when enumeration is too big
  int L_min = 8;
};

// For every (n_pos, n_neg, L <= L_max) class with densities strictly inside
// H, search for a configuration whose cycle carries no nontrivial cluster.
// Empty findings for a class are valid output (the class row is omitted).
std::vector<ScanFinding> hypothesis_scan(const ScanSpec& spec);

// Targeted version for a single class.
std::optional<ScanFinding> scan_class(const ScanSpec& spec, int L, int n_pos, int n_neg,
                                      const std::vector<ScanFinding>& prior);

std::string scan_csv_header();
std::string scan_csv(const ScanFinding& f);

} // namespace latgas
