#pragma once
// Clusters, protoclusters, attraction-basin bounds and phase membership.
//
// A positive cluster is born when a contiguous run of >= 2 positives has its
// leading particle engaged with an opposite-sign root (state magnitude >= 2;
// for tau = 1 a short engagement is the bare adjacency, since the exchange
// completes within one step). The cluster stays alive while the same root
// particle keeps exchanging without a pause: after each completed exchange
// the chain continues iff a positive sits directly behind the root. A long
// re-engagement after a vacancy gap starts a new cluster. Under this
// semantics the lifetime of a cluster equals
//     n_exchanges * tau - leading_state_at_birth + 1   (short root)
//     n_exchanges * tau - leading_state_at_birth + 2   (long root)
// and the basin-of-attraction scans bound who can take part.
//
// Negative-side records are produced by running the positive analysis on the
// reflected-negated configuration; their sites, particle ids and positions
// are therefore expressed in that reflected frame (site i maps to L-1-i).

#include "latgas/rational.hpp"
#include "latgas/ring.hpp"
#include "latgas/tracking.hpp"

#include <optional>
#include <vector>

namespace latgas {

enum class RootKind { Short, Long };

// ------------------------------------------------------------- snapshots

struct ClusterSnapshot {
  int sign = 1;
  int rear_site = 0, lead_site = 0, root_site = 0; // original frame
  RootKind kind = RootKind::Short;
  int leading_state = 0; // magnitude
  int body_size = 0;
};

// Live clusters in a single configuration: maximal same-sign runs of >= 2
// particles whose leader is engaged.
std::vector<ClusterSnapshot> find_clusters(const RingConfig& cfg);

// ------------------------------------------------------- basin functionals

struct WWeights {
  enum class Mode { Outer, Inner }; // Outer weighs a positive tau+1, Inner tau
  Mode mode = Mode::Outer;
  int tau = 1;
  long long q = 0; // leader term: tau-z+1 (short), tau-z+2 (long), tau (protocluster)
};

// q + sum of per-site weights over [k, m], both ends included, indices mod L.
// Requires k <= m and span <= L.
long long w_functional(const RingConfig& cfg, long long k, long long m, const WWeights& w);

struct BaBound {
  bool unbounded = false;
  long long at = 0; // unwrapped site index <= rear anchor; meaningless if unbounded
};

// "-inf" for an unbounded bound, the plain integer otherwise.
std::string to_string(const BaBound& b);

struct BaBounds {
  BaBound outer; // largest k with W = 0 at k or W < 0 at k-1
  BaBound inner; // same scan under the Inner weights
};

// Leftward scan anchored at the leading site m (ring index used as the
// unwrapped origin); emulates the bi-infinite scan by walking the ring with
// per-lap extrapolation. q as in WWeights.
BaBounds ba_bounds_span(const RingConfig& cfg, int m_prime_site, int m_site, long long q_outer,
                        long long q_inner);

// Bounds for a live cluster snapshot; negative snapshots are reflected
// internally and the bounds returned in the reflected frame.
BaBounds ba_bounds(const RingConfig& cfg, const ClusterSnapshot& snap);

// Positives in the unwrapped window [k, m_site], counting periodic copies.
long long count_positive_window(const RingConfig& cfg, long long k, long long m_site);

// ------------------------------------------------------------- lifetimes

// Exact lifetime of a dissolving cluster fed by n_ba_positives exchanges.
// Throws std::invalid_argument for n_ba_positives < 2.
long long predict_lifetime(int n_ba_positives, int tau, int leading_state, RootKind kind);

// Companion coarse bound: n * (tau + 1).
long long lifetime_upper_bound(int n_ba_positives, int tau);

// ---------------------------------------------------------------- history

struct ClusterJoiner {
  int particle = 0;            // tracker id within the record's frame
  long long first_join = 0;
  long long pos_at_birth = 0;  // unwrapped position at the cluster's birth
};

struct ClusterRecord {
  int sign = 1;
  long long birth = 0;
  long long death = -1;        // -1: still alive at the analysis window end
  bool immortal = false;       // alive through more than one full period
  int root_particle = -1;
  RootKind root_kind = RootKind::Short;
  int leading_state = 0;       // at birth
  int rear_site = 0, lead_site = 0, root_site = 0; // at birth, species frame
  int max_run = 0;             // largest simultaneous body size over the life
  int n_exchanges = 0;         // completed root exchanges
  std::vector<ClusterJoiner> members; // birth body plus everyone who joined
  bool trivial = false;        // body never exceeded two particles at a time
  BaBounds bounds;             // at birth
  long long n_outer = -1;      // positives in [j, m] at birth (-1: unbounded)
  long long n_inner = -1;      // positives in [j', m] at birth (-1: unbounded)

  long long lifetime() const { return death < 0 ? -1 : death - birth; }
};

struct ProtoclusterRecord {
  int sign = 1;
  int rear_particle = -1, lead_particle = -1, root_particle = -1;
  long long formation_time = 0; // the birth of the cluster the pair created
  bool trivial = false;
};

struct ClusterHistory {
  CycleReport cycle;
  long long window_end = 0;
  std::vector<ClusterRecord> clusters;
  std::vector<ProtoclusterRecord> protoclusters;
};

// Event log over [0, min(horizon, t0 + 2p)]; horizon < 0 means no cap. The
// window always spans at least one full relative period past the transient,
// which decides every recurrent question by periodicity.
ClusterHistory cluster_history(const RingConfig& cfg, long long horizon = -1,
                               const CycleOptions& opt = {});

// ------------------------------------------------------------ phase flags

struct PhaseMembership {
  bool free_pos = false; // no positive-positive block anywhere on the cycle
  bool free_neg = false;
  bool jam_pos = false;  // every cycle instant covered by a live positive cluster
  bool jam_neg = false;
};

PhaseMembership phase_membership(const RingConfig& cfg, const CycleOptions& opt = {});

} // namespace latgas
