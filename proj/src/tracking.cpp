#include "latgas/tracking.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace latgas {

DensityPair densities(const RingConfig& cfg) {
  return {Rat(cfg.count_positive(), cfg.length()), Rat(cfg.count_negative(), cfg.length())};
}

// ---------------------------------------------------------------- tracker

Tracker::Tracker(const RingConfig& cfg) : id_at_site_(cfg.length(), -1) {
  for (int i = 0; i < cfg.length(); ++i) {
    if (cfg.cells[i] == 0) continue;
    const int id = static_cast<int>(sign_.size());
    sign_.push_back(cfg.cells[i] > 0 ? 1 : -1);
    site_.push_back(i);
    unwrapped_.push_back(i);
    id_at_site_[i] = id;
  }
}

void Tracker::move(int from, int to, int delta) {
  const int id = id_at_site_[from];
  if (id < 0) throw std::logic_error("tracker: move from empty site");
  id_at_site_[from] = -1;
  id_at_site_[to] = id;
  site_[id] = to;
  unwrapped_[id] += delta;
}

void Tracker::apply(const std::vector<StepEvent>& events, int L) {
  auto fwd = [L](int a, int b) { // ring distance a -> b moving right
    int d = b - a;
    return d < 0 ? d + L : d;
  };
  for (const auto& e : events) {
    switch (e.type) {
      case EventType::Moved: {
        const int id = id_at_site_[e.site];
        if (id < 0) throw std::logic_error("tracker: stale move event");
        move(e.site, e.partner, sign_[id] > 0 ? 1 : -1);
        break;
      }
      case EventType::ShortSwap:
      case EventType::LongSwap: {
        const int d = fwd(e.site, e.partner); // 1 short, 2 long
        const int pos = id_at_site_[e.site], neg = id_at_site_[e.partner];
        if (pos < 0 || neg < 0) throw std::logic_error("tracker: stale swap event");
        id_at_site_[e.site] = neg;
        id_at_site_[e.partner] = pos;
        site_[pos] = e.partner;
        site_[neg] = e.site;
        unwrapped_[pos] += d;
        unwrapped_[neg] -= d;
        break;
      }
      default:
        break; // starts, waits and blocks do not move anyone
    }
  }
}

std::vector<ParticleTrack> track(const RingConfig& cfg, long long horizon) {
  if (horizon < 0) throw std::invalid_argument("negative horizon");
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("track of inadmissible configuration");
  Tracker tr(cfg);
  std::vector<ParticleTrack> out(tr.particle_count());
  for (int id = 0; id < tr.particle_count(); ++id) {
    out[id].id = id;
    out[id].sign = tr.sign(id);
    out[id].unwrapped.reserve(static_cast<size_t>(horizon) + 1);
    out[id].unwrapped.push_back(tr.unwrapped(id));
  }
  Stepper st(cfg);
  for (long long t = 0; t < horizon; ++t) {
    st.advance();
    tr.apply(st.events(), st.length());
    for (int id = 0; id < tr.particle_count(); ++id)
      out[id].unwrapped.push_back(tr.unwrapped(id));
  }
  return out;
}

// ------------------------------------------------------- canonical rotation

namespace {

// Booth's least-rotation algorithm; returns r such that reading the cells
// from offset r gives the lexicographically minimal rotation.
int least_rotation_index(const std::vector<SiteState>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; ++j) {
    const SiteState cj = s[j % n];
    int i = f[j - k - 1];
    while (i != -1 && cj != s[(k + i + 1) % n]) {
      if (cj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && cj != s[k % n]) {
      if (cj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::string canonical_key(const std::vector<SiteState>& cells, int* rot) {
  const int n = static_cast<int>(cells.size());
  const int r = least_rotation_index(cells);
  if (rot) *rot = r;
  std::string key(static_cast<size_t>(n), '\0');
  for (int i = 0; i < n; ++i) key[i] = static_cast<char>(cells[(i + r) % n]);
  return key;
}

std::vector<SiteState> rotate_left(const std::vector<SiteState>& cells, int s) {
  const int n = static_cast<int>(cells.size());
  std::vector<SiteState> out(n);
  for (int i = 0; i < n; ++i) out[i] = cells[(i + s) % n];
  return out;
}

// Minimal d | L with rotate_left(cells, d) == cells.
int symmetry_period(const std::vector<SiteState>& cells) {
  const int n = static_cast<int>(cells.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = cells[(i + d) % n] == cells[i];
    if (ok) return d;
  }
  return n;
}

long long default_budget(const RingConfig& cfg, const CycleOptions& opt) {
  return opt.max_steps > 0 ? opt.max_steps : 1000000LL * cfg.length();
}

struct RawCycle {
  long long transient = 0;
  long long rel_period = 0;
  int shift = 0;
};

RawCycle find_cycle_hashed(const RingConfig& cfg, long long budget, std::size_t cap,
                           bool* overflow) {
  *overflow = false;
  std::unordered_map<std::string, std::pair<long long, int>> seen;
  Stepper st(cfg);
  for (long long t = 0;; ++t) {
    int rot = 0;
    std::string key = canonical_key(st.cells(), &rot);
    auto it = seen.find(key);
    if (it != seen.end()) {
      RawCycle rc;
      rc.transient = it->second.first;
      rc.rel_period = t - it->second.first;
      rc.shift = (it->second.second - rot) % st.length();
      if (rc.shift < 0) rc.shift += st.length();
      return rc;
    }
    if (seen.size() >= cap) {
      *overflow = true;
      return {};
    }
    seen.emplace(std::move(key), std::make_pair(t, rot));
    if (t >= budget) throw std::runtime_error("no cycle within step budget");
    st.advance();
  }
}

// Constant-memory fallback (Brent) on the canonical-form sequence.
RawCycle find_cycle_brent(const RingConfig& cfg, long long budget) {
  Stepper hare(cfg);
  long long power = 1, lam = 1;
  std::string tortoise_key = canonical_key(hare.cells(), nullptr);
  hare.advance();
  long long steps = 1;
  while (canonical_key(hare.cells(), nullptr) != tortoise_key) {
    if (power == lam) {
      tortoise_key = canonical_key(hare.cells(), nullptr);
      power *= 2;
      lam = 0;
    }
    hare.advance();
    ++steps;
    ++lam;
    if (steps > budget) throw std::runtime_error("no cycle within step budget");
  }
  Stepper a(cfg), b(cfg);
  for (long long i = 0; i < lam; ++i) b.advance();
  long long mu = 0;
  while (canonical_key(a.cells(), nullptr) != canonical_key(b.cells(), nullptr)) {
    a.advance();
    b.advance();
    ++mu;
  }
  int rot_a = 0, rot_b = 0;
  canonical_key(a.cells(), &rot_a);
  canonical_key(b.cells(), &rot_b);
  RawCycle rc;
  rc.transient = mu;
  rc.rel_period = lam;
  rc.shift = (rot_a - rot_b) % cfg.length();
  if (rc.shift < 0) rc.shift += cfg.length();
  return rc;
}

struct SpeciesReplay {
  std::vector<long long> disp; // per slot, over one relative period
  int advance = 0;             // slot relabeling per relative period
};

// Per-slot displacements over one relative period starting at t0. The slot
// advance w is positional: after p steps the state is a rotation by `shift`,
// so the particle now at ring site r plays the role the particle at site
// (r+shift) mod L played at t0; w is the slot offset of that map. A second
// replayed period asserts that displacements recur accordingly.
void species_replays(const RingConfig& at_t0, long long p, int shift, SpeciesReplay* pos,
                     SpeciesReplay* neg) {
  Tracker tr(at_t0);
  const int L = at_t0.length();
  const int n_total = tr.particle_count();
  std::vector<int> ids_pos, ids_neg;
  for (int id = 0; id < n_total; ++id)
    (tr.sign(id) > 0 ? ids_pos : ids_neg).push_back(id);

  std::vector<long long> start(n_total), mid(n_total), end(n_total);
  std::vector<int> site_mid(n_total);
  for (int id = 0; id < n_total; ++id) start[id] = tr.unwrapped(id);
  Stepper st(at_t0);
  for (long long t = 0; t < p; ++t) {
    st.advance();
    tr.apply(st.events(), st.length());
  }
  for (int id = 0; id < n_total; ++id) {
    mid[id] = tr.unwrapped(id);
    site_mid[id] = tr.ring_site(id);
  }
  for (long long t = 0; t < p; ++t) {
    st.advance();
    tr.apply(st.events(), st.length());
  }
  for (int id = 0; id < n_total; ++id) end[id] = tr.unwrapped(id);

  auto fill = [&](const std::vector<int>& ids, SpeciesReplay* out) {
    const int n = static_cast<int>(ids.size());
    out->disp.assign(n, 0);
    out->advance = 0;
    if (n == 0) return;
    std::vector<long long> d1(n), d2(n);
    std::vector<int> slot_site(n); // t0 sites, ascending (ids are in site order)
    for (int k = 0; k < n; ++k) {
      d1[k] = mid[ids[k]] - start[ids[k]];
      d2[k] = end[ids[k]] - mid[ids[k]];
      slot_site[k] = static_cast<int>(((start[ids[k]] % L) + L) % L);
    }
    out->disp = d1;
    const int role_site = (site_mid[ids[0]] + shift) % L;
    const auto it = std::find(slot_site.begin(), slot_site.end(), role_site);
    if (it == slot_site.end())
      throw std::logic_error("cycle replay: rotated site is not a slot");
    const int w = static_cast<int>(it - slot_site.begin());
    for (int k = 0; k < n; ++k) {
      if (d2[k] != d1[(k + w) % n])
        throw std::logic_error("cycle replay: displacement pattern does not recur");
    }
    out->advance = w;
  };
  fill(ids_pos, pos);
  fill(ids_neg, neg);
}

SpeciesCycleStats make_stats(const SpeciesReplay& rep, long long exact_over_rel) {
  SpeciesCycleStats s;
  s.count = static_cast<int>(rep.disp.size());
  s.sum_disp = std::accumulate(rep.disp.begin(), rep.disp.end(), 0LL);
  if (s.count == 0) return s;
  const int n = s.count;
  // Limit velocity of particle k is the average displacement over its orbit
  // under the slot advance; all orbits must agree.
  const int g = std::gcd(n, rep.advance);
  std::vector<long long> class_sum(g, 0);
  std::vector<int> class_cnt(g, 0);
  for (int k = 0; k < n; ++k) {
    class_sum[k % g] += rep.disp[k];
    class_cnt[k % g] += 1;
  }
  for (int c = 1; c < g; ++c) {
    if (class_sum[c] * class_cnt[0] != class_sum[0] * class_cnt[c])
      throw std::logic_error("per-particle limit velocities differ within a species");
  }
  std::vector<long long> dP(n, 0);
  for (int k = 0; k < n; ++k) {
    long long cur = k, sum = 0;
    for (long long j = 0; j < exact_over_rel; ++j) {
      sum += rep.disp[static_cast<int>(cur)];
      cur = (cur + rep.advance) % n;
    }
    dP[k] = sum;
  }
  s.slot_shift = static_cast<int>((static_cast<long long>(rep.advance) * exact_over_rel) % n);
  s.uniform = std::all_of(dP.begin(), dP.end(), [&](long long v) { return v == dP[0]; });
  s.disp_exact = s.uniform ? dP[0] : 0;
  return s;
}

} // namespace

std::optional<Rat> CycleReport::velocity_pos() const {
  if (pos.count == 0) return std::nullopt;
  return Rat(pos.sum_disp, static_cast<long long>(pos.count) * rel_period);
}

std::optional<Rat> CycleReport::velocity_neg() const {
  if (neg.count == 0) return std::nullopt;
  return Rat(-neg.sum_disp, static_cast<long long>(neg.count) * rel_period);
}

CycleReport detect_cycle(const RingConfig& cfg, const CycleOptions& opt) {
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("detect_cycle on inadmissible configuration");
  const long long budget = default_budget(cfg, opt);
  bool overflow = false;
  RawCycle rc = find_cycle_hashed(cfg, budget, opt.hash_entry_cap, &overflow);
  if (overflow) rc = find_cycle_brent(cfg, budget);

  const RingConfig at_t0 = evolve(cfg, rc.transient);

  // The shift acts modulo the spatial symmetry of the recurrent state.
  const int s0 = symmetry_period(at_t0.cells);
  const int eff = rc.shift % s0;
  const long long k = eff == 0 ? 1 : s0 / std::gcd(s0, eff);

  CycleReport rep;
  rep.transient = rc.transient;
  rep.rel_period = rc.rel_period;
  rep.shift = rc.shift;
  rep.period = rc.rel_period * k;

  const RingConfig at_t0p = evolve(at_t0, rc.rel_period);
  if (at_t0p.cells != rotate_left(at_t0.cells, rc.shift))
    throw std::logic_error("cycle detection: rotation recurrence mismatch");

  SpeciesReplay pos, neg;
  species_replays(at_t0, rc.rel_period, rc.shift, &pos, &neg);
  rep.pos = make_stats(pos, k);
  rep.neg = make_stats(neg, k);
  return rep;
}

VelocityPair average_velocity(const RingConfig& cfg, const CycleOptions& opt) {
  const CycleReport rep = detect_cycle(cfg, opt);
  return {rep.velocity_pos(), rep.velocity_neg()};
}

// --------------------------------------------------------------- pair gaps

namespace {

struct PairSet {
  int sign = 1;
  std::vector<int> ids;        // movement order: rear first
  std::vector<long long> base; // offset so the gap at t=0 equals separation-1
};

PairSet species_pairs(const Tracker& tr, int sign, int L) {
  PairSet ps;
  ps.sign = sign;
  for (int id = 0; id < tr.particle_count(); ++id)
    if (tr.sign(id) == sign) ps.ids.push_back(id);
  if (sign < 0) std::reverse(ps.ids.begin(), ps.ids.end()); // leftward order
  const int n = static_cast<int>(ps.ids.size());
  ps.base.resize(n);
  for (int kk = 0; kk < n; ++kk) {
    const int rear = ps.ids[kk], lead = ps.ids[(kk + 1) % n];
    long long sep =
        (static_cast<long long>(sign) * (tr.unwrapped(lead) - tr.unwrapped(rear))) % L;
    if (sep <= 0) sep += L;
    ps.base[kk] = sep - 1 - sign * (tr.unwrapped(lead) - tr.unwrapped(rear));
  }
  return ps;
}

long long pair_gap_now(const PairSet& ps, const Tracker& tr, int kk) {
  const int rear = ps.ids[kk], lead = ps.ids[(kk + 1) % ps.ids.size()];
  return ps.base[kk] + ps.sign * (tr.unwrapped(lead) - tr.unwrapped(rear));
}

} // namespace

std::vector<PairGapReport> pair_gaps(const RingConfig& cfg, long long horizon) {
  if (horizon < 0) throw std::invalid_argument("negative horizon");
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("pair_gaps on inadmissible configuration");
  Tracker tr(cfg);
  const int L = cfg.length();
  std::vector<PairSet> sets;
  for (int sign : {+1, -1}) {
    PairSet ps = species_pairs(tr, sign, L);
    if (ps.ids.size() >= 2) sets.push_back(std::move(ps));
  }
  std::vector<PairGapReport> out;
  std::vector<std::pair<int, int>> index; // (set, pair)
  for (size_t s = 0; s < sets.size(); ++s) {
    for (size_t kk = 0; kk < sets[s].ids.size(); ++kk) {
      PairGapReport r;
      r.rear_id = sets[s].ids[kk];
      r.lead_id = sets[s].ids[(kk + 1) % sets[s].ids.size()];
      r.initial_gap = pair_gap_now(sets[s], tr, static_cast<int>(kk));
      r.initial_separation = r.initial_gap + 1;
      r.max_gap = r.min_gap = r.initial_gap;
      out.push_back(r);
      index.emplace_back(static_cast<int>(s), static_cast<int>(kk));
    }
  }
  Stepper st(cfg);
  for (long long t = 0; t < horizon; ++t) {
    st.advance();
    tr.apply(st.events(), L);
    for (size_t q = 0; q < out.size(); ++q) {
      const long long d = pair_gap_now(sets[index[q].first], tr, index[q].second);
      out[q].max_gap = std::max(out[q].max_gap, d);
      out[q].min_gap = std::min(out[q].min_gap, d);
    }
  }
  return out;
}

std::vector<PairGapReport> pair_gaps_cycle(const RingConfig& cfg, const CycleOptions& opt) {
  const CycleReport rep = detect_cycle(cfg, opt);
  const int L = cfg.length();

  Tracker tr(cfg);
  std::vector<PairSet> sets;
  for (int sign : {+1, -1}) {
    PairSet ps = species_pairs(tr, sign, L);
    if (ps.ids.size() >= 2) sets.push_back(std::move(ps));
  }
  struct Acc {
    long long pre_max, pre_min; // over [0, t0]
    long long win_max, win_min; // over [t0, t0+p]
  };
  std::vector<std::vector<Acc>> acc(sets.size());
  for (size_t s = 0; s < sets.size(); ++s) {
    acc[s].resize(sets[s].ids.size());
    for (size_t kk = 0; kk < sets[s].ids.size(); ++kk) {
      const long long d = pair_gap_now(sets[s], tr, static_cast<int>(kk));
      acc[s][kk] = {d, d, d, d};
    }
  }
  Stepper st(cfg);
  const long long horizon = rep.transient + rep.rel_period;
  for (long long t = 0; t < horizon; ++t) {
    st.advance();
    tr.apply(st.events(), L);
    for (size_t s = 0; s < sets.size(); ++s) {
      for (size_t kk = 0; kk < sets[s].ids.size(); ++kk) {
        const long long d = pair_gap_now(sets[s], tr, static_cast<int>(kk));
        if (t + 1 <= rep.transient) {
          acc[s][kk].pre_max = std::max(acc[s][kk].pre_max, d);
          acc[s][kk].pre_min = std::min(acc[s][kk].pre_min, d);
        }
        if (t + 1 >= rep.transient) {
          if (t + 1 == rep.transient) {
            acc[s][kk].win_max = acc[s][kk].win_min = d;
          } else {
            acc[s][kk].win_max = std::max(acc[s][kk].win_max, d);
            acc[s][kk].win_min = std::min(acc[s][kk].win_min, d);
          }
        }
      }
    }
  }

  // One relative period advances pair labels by the species slot advance.
  SpeciesReplay pos_rep, neg_rep;
  species_replays(evolve(cfg, rep.transient), rep.rel_period, rep.shift, &pos_rep, &neg_rep);

  std::vector<PairGapReport> out;
  for (size_t s = 0; s < sets.size(); ++s) {
    const int n = static_cast<int>(sets[s].ids.size());
    const int w = sets[s].sign > 0 ? pos_rep.advance : neg_rep.advance;
    const int g = std::gcd(n, w);
    std::vector<long long> orbit_max(g, LLONG_MIN), orbit_min(g, LLONG_MAX);
    for (int kk = 0; kk < n; ++kk) {
      orbit_max[kk % g] = std::max(orbit_max[kk % g], acc[s][kk].win_max);
      orbit_min[kk % g] = std::min(orbit_min[kk % g], acc[s][kk].win_min);
    }
    Tracker fresh(cfg);
    for (int kk = 0; kk < n; ++kk) {
      PairGapReport r;
      r.rear_id = sets[s].ids[kk];
      r.lead_id = sets[s].ids[(kk + 1) % n];
      r.initial_gap = pair_gap_now(sets[s], fresh, kk);
      r.initial_separation = r.initial_gap + 1;
      r.max_gap = std::max(acc[s][kk].pre_max, orbit_max[kk % g]);
      r.min_gap = std::min(acc[s][kk].pre_min, orbit_min[kk % g]);
      out.push_back(r);
    }
  }
  return out;
}

} // namespace latgas
