#include "latgas/clusters.hpp"

#include "latgas/dynamics.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <stdexcept>

namespace latgas {

namespace {

int wrap(int i, int L) { return i >= L ? i - L : (i < 0 ? i + L : i); }

// Engagement of a positive leader with its root, read off one configuration.
struct Engagement {
  int leader_site = 0;
  int root_site = 0;
  RootKind kind = RootKind::Short;
  int state = 0;
};

// All positive-side engagements. With tau = 1 a short engagement is the bare
// (+1, -1) adjacency; otherwise a state >= 2 with its admissible partner.
std::vector<Engagement> positive_engagements(const std::vector<SiteState>& x, int tau) {
  const int L = static_cast<int>(x.size());
  std::vector<Engagement> out;
  for (int i = 0; i < L; ++i) {
    if (x[i] >= 2) {
      if (x[wrap(i + 1, L)] == -x[i]) {
        out.push_back({i, wrap(i + 1, L), RootKind::Short, x[i]});
      } else if (x[wrap(i + 1, L)] == 0 && x[wrap(i + 2, L)] == -x[i]) {
        out.push_back({i, wrap(i + 2, L), RootKind::Long, x[i]});
      } else {
        throw std::logic_error("engagement scan on inadmissible state");
      }
    } else if (tau == 1 && x[i] == 1 && x[wrap(i + 1, L)] == -1) {
      out.push_back({i, wrap(i + 1, L), RootKind::Short, 1});
    }
  }
  return out;
}

// Contiguous positive run ending at `lead`, walking left. Returns sites in
// rear-to-lead order.
std::vector<int> run_ending_at(const std::vector<SiteState>& x, int lead) {
  const int L = static_cast<int>(x.size());
  std::vector<int> sites{lead};
  int i = wrap(lead - 1, L);
  while (x[i] > 0 && static_cast<int>(sites.size()) < L) {
    sites.push_back(i);
    i = wrap(i - 1, L);
  }
  std::reverse(sites.begin(), sites.end());
  return sites;
}

long long site_weight(SiteState s, int tau, bool inner) {
  if (s > 0) return inner ? tau : tau + 1;
  if (s < 0) return -tau;
  return -1;
}

BaBound scan_bound(const std::vector<SiteState>& x, int tau, int m_site, int body_len,
                   long long q, bool inner) {
  const int L = static_cast<int>(x.size());
  long long lap_sum = 0;
  for (SiteState s : x) lap_sum += site_weight(s, tau, inner);

  long long cur = q;
  for (int off = 0; off < body_len; ++off)
    cur += site_weight(x[wrap(m_site - off, L)], tau, inner);
  const long long cur0 = cur;

  long long k_unw = static_cast<long long>(m_site) - (body_len - 1);
  int k_ring = wrap(m_site - (body_len - 1), L);
  const long long cap =
      lap_sum < 0
          ? static_cast<long long>(L) * (3 + (q + static_cast<long long>(L) * (tau + 1)) /
                                                 std::max(1LL, -lap_sum))
          : static_cast<long long>(L);

  for (long long walked = 0;; ++walked) {
    if (walked == static_cast<long long>(L) && lap_sum >= 0) {
      // Values repeat shifted by lap_sum per lap; only the anchor value can
      // still reach zero.
      if (lap_sum > 0 && cur0 < 0 && (-cur0) % lap_sum == 0)
        return {false, static_cast<long long>(m_site) - (body_len - 1) -
                           L * ((-cur0) / lap_sum)};
      return {true, 0};
    }
    if (walked > cap) throw std::logic_error("basin scan failed to terminate");
    const long long next = cur + site_weight(x[wrap(k_ring - 1, L)], tau, inner);
    if (cur == 0 || next < 0) return {false, k_unw};
    k_ring = wrap(k_ring - 1, L);
    --k_unw;
    cur = next;
  }
}

long long q_for(RootKind kind, int leading_state, int tau) {
  return kind == RootKind::Short ? tau - leading_state + 1 : tau - leading_state + 2;
}

} // namespace

// --------------------------------------------------------------- snapshots

std::vector<ClusterSnapshot> find_clusters(const RingConfig& cfg) {
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("find_clusters on inadmissible configuration");
  const int L = cfg.length();
  std::vector<ClusterSnapshot> out;
  auto scan = [L](const RingConfig& c, int sign, std::vector<ClusterSnapshot>* res) {
    for (const Engagement& e : positive_engagements(c.cells, c.tau)) {
      const auto run = run_ending_at(c.cells, e.leader_site);
      if (run.size() < 2) continue;
      ClusterSnapshot s;
      s.sign = sign;
      s.kind = e.kind;
      s.leading_state = e.state;
      s.body_size = static_cast<int>(run.size());
      if (sign > 0) {
        s.rear_site = run.front();
        s.lead_site = run.back();
        s.root_site = e.root_site;
      } else {
        s.rear_site = L - 1 - run.front();
        s.lead_site = L - 1 - run.back();
        s.root_site = L - 1 - e.root_site;
      }
      res->push_back(s);
    }
  };
  scan(cfg, +1, &out);
  scan(reflect_dual(cfg), -1, &out);
  return out;
}

// ------------------------------------------------------- basin functionals

long long w_functional(const RingConfig& cfg, long long k, long long m, const WWeights& w) {
  if (k > m) throw std::invalid_argument("w_functional: k must not exceed m");
  if (m - k + 1 > cfg.length()) throw std::invalid_argument("w_functional: span exceeds ring");
  long long sum = w.q;
  const bool inner = w.mode == WWeights::Mode::Inner;
  for (long long i = k; i <= m; ++i) sum += site_weight(cfg.at(i), w.tau, inner);
  return sum;
}

std::string to_string(const BaBound& b) {
  return b.unbounded ? "-inf" : std::to_string(b.at);
}

BaBounds ba_bounds_span(const RingConfig& cfg, int m_prime_site, int m_site,
                        long long q_outer, long long q_inner) {
  const int L = cfg.length();
  int body_len = m_site - m_prime_site;
  body_len = (body_len % L + L) % L;
  body_len += 1;
  BaBounds b;
  b.outer = scan_bound(cfg.cells, cfg.tau, m_site, body_len, q_outer, false);
  b.inner = scan_bound(cfg.cells, cfg.tau, m_site, body_len, q_inner, true);
  return b;
}

BaBounds ba_bounds(const RingConfig& cfg, const ClusterSnapshot& snap) {
  const long long q = q_for(snap.kind, snap.leading_state, cfg.tau);
  if (snap.sign > 0) return ba_bounds_span(cfg, snap.rear_site, snap.lead_site, q, q);
  const RingConfig dual = reflect_dual(cfg);
  const int L = cfg.length();
  return ba_bounds_span(dual, L - 1 - snap.rear_site, L - 1 - snap.lead_site, q, q);
}

long long count_positive_window(const RingConfig& cfg, long long k, long long m_site) {
  if (k > m_site) throw std::invalid_argument("count_positive_window: empty window");
  const int L = cfg.length();
  const long long span = m_site - k + 1;
  const long long laps = span / L, rem = span % L;
  long long count = laps * cfg.count_positive();
  for (long long off = 0; off < rem; ++off) count += cfg.at(m_site - off) > 0;
  return count;
}

// --------------------------------------------------------------- lifetimes

long long predict_lifetime(int n_ba_positives, int tau, int leading_state, RootKind kind) {
  if (n_ba_positives < 2)
    throw std::invalid_argument("predict_lifetime needs at least two particles");
  return static_cast<long long>(n_ba_positives) * tau - leading_state +
         (kind == RootKind::Short ? 1 : 2);
}

long long lifetime_upper_bound(int n_ba_positives, int tau) {
  return static_cast<long long>(n_ba_positives) * (tau + 1);
}

// ----------------------------------------------------------------- history

namespace {

struct Chain {
  ClusterRecord rec;
  std::vector<long long> positions_at_birth; // per tracker id
  bool seen_this_step = false;

  bool has_member(int id) const {
    for (const auto& m : rec.members)
      if (m.particle == id) return true;
    return false;
  }
};

// Positive-side pass over [0, window_end]. Records use the frame of `cfg`.
void positive_pass(const RingConfig& cfg, long long window_end, long long rel_period,
                   int sign, std::vector<ClusterRecord>* clusters,
                   std::vector<ProtoclusterRecord>* protos) {
  const int L = cfg.length();
  Stepper st(cfg);
  Tracker tr(cfg);
  std::map<int, Chain> live; // root particle -> chain

  auto absorb_run = [&](Chain& ch, const std::vector<int>& run_sites, long long t) {
    ch.rec.max_run = std::max(ch.rec.max_run, static_cast<int>(run_sites.size()));
    for (int s : run_sites) {
      const int id = tr.id_at(s);
      if (id < 0) throw std::logic_error("cluster run over a vacancy");
      if (!ch.has_member(id))
        ch.rec.members.push_back({id, t, ch.positions_at_birth[id]});
    }
  };

  auto finalize = [&](Chain&& ch, long long death) {
    ch.rec.death = death;
    if (death < 0)
      ch.rec.immortal = window_end - ch.rec.birth > rel_period;
    ch.rec.trivial = ch.rec.max_run <= 2;
    clusters->push_back(std::move(ch.rec));
  };

  for (long long t = 0;; ++t) {
    const auto& x = st.cells();
    for (auto& [root, ch] : live) ch.seen_this_step = false;

    for (const Engagement& e : positive_engagements(x, cfg.tau)) {
      const int root_id = tr.id_at(e.root_site);
      const auto run = run_ending_at(x, e.leader_site);
      auto it = live.find(root_id);
      if (it != live.end()) {
        it->second.seen_this_step = true;
        absorb_run(it->second, run, t);
      } else if (run.size() >= 2) {
        Chain ch;
        ch.rec.sign = sign;
        ch.rec.birth = t;
        ch.rec.root_particle = root_id;
        ch.rec.root_kind = e.kind;
        ch.rec.leading_state = e.state;
        ch.rec.rear_site = run.front();
        ch.rec.lead_site = run.back();
        ch.rec.root_site = e.root_site;
        ch.rec.max_run = 0;
        ch.positions_at_birth.assign(tr.particle_count(), 0);
        for (int id = 0; id < tr.particle_count(); ++id)
          ch.positions_at_birth[id] = tr.unwrapped(id);
        const RingConfig now(cfg.tau, x);
        const long long q = q_for(e.kind, e.state, cfg.tau);
        ch.rec.bounds = ba_bounds_span(now, run.front(), e.leader_site, q, q);
        // Anchor is the ring index of the lead site; translate window counts.
        ch.rec.n_outer = ch.rec.bounds.outer.unbounded
                             ? -1
                             : count_positive_window(now, ch.rec.bounds.outer.at,
                                                     e.leader_site);
        ch.rec.n_inner = ch.rec.bounds.inner.unbounded
                             ? -1
                             : count_positive_window(now, ch.rec.bounds.inner.at,
                                                     e.leader_site);
        ch.seen_this_step = true;
        absorb_run(ch, run, t);

        ProtoclusterRecord pr;
        pr.sign = sign;
        pr.formation_time = t;
        pr.root_particle = root_id;
        pr.lead_particle = tr.id_at(run.back());
        pr.rear_particle = tr.id_at(run[run.size() - 2]);
        protos->push_back(pr);

        live.emplace(root_id, std::move(ch));
      }
    }

    // Chains whose root is momentarily free: continue through an adjacent
    // positive (the next short exchange starts immediately), die otherwise.
    for (auto it = live.begin(); it != live.end();) {
      Chain& ch = it->second;
      if (ch.seen_this_step) {
        ++it;
        continue;
      }
      const int r = tr.ring_site(it->first);
      if (x[r] != -1) throw std::logic_error("chain root in unexpected state");
      const int behind = wrap(r - 1, L);
      if (x[behind] > 0) {
        absorb_run(ch, run_ending_at(x, behind), t);
        ++it;
      } else {
        finalize(std::move(ch), t);
        it = live.erase(it);
      }
    }

    if (t == window_end) break;

    st.advance();
    // Count completed exchanges against the pre-step tracker state.
    for (const StepEvent& e : st.events()) {
      if (e.type != EventType::ShortSwap && e.type != EventType::LongSwap) continue;
      const int root_id = tr.id_at(e.partner);
      auto it = live.find(root_id);
      if (it != live.end()) it->second.rec.n_exchanges += 1;
    }
    tr.apply(st.events(), L);
  }

  for (auto& [root, ch] : live) finalize(std::move(ch), -1);

  // Link protocluster triviality to the cluster each pair created.
  for (auto& pr : *protos) {
    if (pr.sign != sign) continue;
    for (const auto& rec : *clusters) {
      if (rec.sign == sign && rec.birth == pr.formation_time &&
          rec.root_particle == pr.root_particle) {
        pr.trivial = rec.trivial;
        break;
      }
    }
  }
}

} // namespace

ClusterHistory cluster_history(const RingConfig& cfg, long long horizon,
                               const CycleOptions& opt) {
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("cluster_history on inadmissible configuration");
  ClusterHistory hist;
  hist.cycle = detect_cycle(cfg, opt);
  long long window_end = hist.cycle.transient + 2 * hist.cycle.rel_period;
  if (horizon >= 0) window_end = std::min(window_end, horizon);
  hist.window_end = window_end;

  positive_pass(cfg, window_end, hist.cycle.rel_period, +1, &hist.clusters,
                &hist.protoclusters);
  positive_pass(reflect_dual(cfg), window_end, hist.cycle.rel_period, -1, &hist.clusters,
                &hist.protoclusters);
  return hist;
}

// -------------------------------------------------------------- phase flags

PhaseMembership phase_membership(const RingConfig& cfg, const CycleOptions& opt) {
  const CycleReport rep = detect_cycle(cfg, opt);
  PhaseMembership out;

  // Free flags: no same-sign block during one full period of the cycle.
  RingConfig at_t0 = evolve(cfg, rep.transient);
  Stepper st(at_t0);
  bool block_pos = false, block_neg = false;
  for (long long t = 0; t < rep.rel_period; ++t) {
    st.advance();
    for (const StepEvent& e : st.events()) {
      if (e.type != EventType::SimpleBlock) continue;
      (e.partner > 0 ? block_pos : block_neg) = true;
    }
  }
  out.free_pos = !block_pos;
  out.free_neg = !block_neg;

  // Jam flags: every instant of a full period covered by a live cluster.
  const ClusterHistory hist = cluster_history(cfg, -1, opt);
  const long long w_lo = rep.transient + rep.rel_period;
  const long long w_hi = rep.transient + 2 * rep.rel_period; // exclusive
  auto covered = [&](int sign) {
    std::vector<char> cov(static_cast<size_t>(w_hi - w_lo), 0);
    for (const auto& rec : hist.clusters) {
      if (rec.sign != sign) continue;
      const long long lo = std::max(rec.birth, w_lo);
      const long long hi = rec.death < 0 ? w_hi : std::min(rec.death, w_hi);
      for (long long t = lo; t < hi; ++t) cov[static_cast<size_t>(t - w_lo)] = 1;
    }
    return std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
  };
  out.jam_pos = covered(+1);
  out.jam_neg = covered(-1);
  return out;
}

} // namespace latgas
