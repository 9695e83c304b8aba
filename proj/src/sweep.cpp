#include "latgas/sweep.hpp"

#include "latgas/dynamics.hpp"
#include "latgas/formats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <atomic>
#include <fstream>
#include <random>
#include <stdexcept>
#include <thread>

namespace latgas {

RingConfig even_ring(int tau, int L, int n_pos, int n_neg) {
  if (n_pos < 0 || n_neg < 0 || n_pos + n_neg > L)
    throw std::invalid_argument("even_ring: counts do not fit the ring");
  std::vector<SiteState> cells(L, 0);
  for (int k = 0; k < n_pos; ++k)
    cells[static_cast<int>(static_cast<long long>(k) * L / n_pos)] = 1;
  for (int k = 0; k < n_neg; ++k) {
    int site = static_cast<int>(((2LL * k + 1) * L) / (2 * n_neg)) % L;
    while (cells[site] != 0) site = (site + 1) % L;
    cells[site] = -1;
  }
  return RingConfig(tau, std::move(cells));
}

// ------------------------------------------------------------------ sweeps

namespace {

std::string opt_rat(const std::optional<Rat>& r) { return r ? to_string(*r) : "n/a"; }

struct GridPoint {
  int tau, L, n_pos, n_neg;
};

std::vector<GridPoint> grid_points(const SweepSpec& spec) {
  std::vector<GridPoint> pts;
  for (int tau : spec.taus) {
    for (int L : spec.lengths) {
      for (int i = 0; i <= spec.grid; ++i) {
        for (int j = 0; i + j <= spec.grid; ++j) {
          // Realizable iff i/grid and j/grid are exact site counts on L.
          if ((static_cast<long long>(i) * L) % spec.grid != 0) continue;
          if ((static_cast<long long>(j) * L) % spec.grid != 0) continue;
          const int np = static_cast<int>(static_cast<long long>(i) * L / spec.grid);
          const int nn = static_cast<int>(static_cast<long long>(j) * L / spec.grid);
          if (np + nn > L) continue;
          pts.push_back({tau, L, np, nn});
        }
      }
    }
  }
  return pts;
}

SweepRow measure_point(const GridPoint& p, long long horizon_cap, bool with_phase) {
  SweepRow row;
  row.tau = p.tau;
  row.L = p.L;
  row.n_pos = p.n_pos;
  row.n_neg = p.n_neg;
  row.rho = Rat(p.n_pos, p.L);
  row.rho_tilde = Rat(p.n_neg, p.L);
  const RegionLabel label = classify_region(row.rho, row.rho_tilde, p.tau);
  row.region = to_string(label.region);
  const VelocityPrediction pred = predicted_velocities(row.rho, row.rho_tilde, p.tau);
  row.v_predicted = pred.v;
  row.vt_predicted = pred.vt;

  const RingConfig cfg = even_ring(p.tau, p.L, p.n_pos, p.n_neg);
  CycleOptions copt;
  copt.max_steps = horizon_cap;
  try {
    const CycleReport rep = detect_cycle(cfg, copt);
    row.transient = rep.transient;
    row.period = rep.period;
    row.v_measured = rep.velocity_pos();
    row.vt_measured = rep.velocity_neg();
  } catch (const std::runtime_error&) {
    row.flags = "no-cycle-within-budget";
    return row;
  }

  if (with_phase) {
    CycleOptions copt2;
    copt2.max_steps = horizon_cap;
    const PhaseMembership pm = phase_membership(cfg, copt2);
    std::string agree = "n/a";
    if (label.region == Region::A)
      agree = (pm.free_pos && pm.free_neg && !pm.jam_pos && !pm.jam_neg) ? "yes" : "no";
    else if (label.region == Region::B)
      agree = (pm.free_pos && pm.jam_neg) ? "yes" : "no";
    else if (label.region == Region::C)
      agree = (pm.free_neg && pm.jam_pos) ? "yes" : "no";
    row.flags = std::string("free+=") + (pm.free_pos ? "1" : "0") +
                ";free-=" + (pm.free_neg ? "1" : "0") +
                ";jam+=" + (pm.jam_pos ? "1" : "0") +
                ";jam-=" + (pm.jam_neg ? "1" : "0") + ";agree=" + agree;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool with_phase) {
  const auto pts = grid_points(spec);
  std::vector<SweepRow> rows(pts.size());
  const unsigned hw = std::thread::hardware_concurrency();
  const int n_threads = spec.threads > 0 ? spec.threads : std::max(1u, hw);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= pts.size()) return;
      rows[idx] = measure_point(pts[idx], spec.horizon_cap, with_phase);
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

} // namespace

std::string SweepRow::csv_header() {
  return "tau,L,n_pos,n_neg,rho,rho_tilde,region,V_measured,Vt_measured,"
         "V_predicted,Vt_predicted,transient,period,flags";
}

std::string SweepRow::csv() const {
  std::string s;
  s += std::to_string(tau) + "," + std::to_string(L) + "," + std::to_string(n_pos) + "," +
       std::to_string(n_neg) + ",";
  s += to_string(rho) + "," + to_string(rho_tilde) + "," + region + ",";
  s += opt_rat(v_measured) + "," + opt_rat(vt_measured) + ",";
  s += opt_rat(v_predicted) + "," + opt_rat(vt_predicted) + ",";
  s += std::to_string(transient) + "," + std::to_string(period) + "," + flags;
  return s;
}

std::vector<SweepRow> sweep_fundamental(const SweepSpec& spec) {
  return run_sweep(spec, false);
}

std::vector<SweepRow> sweep_phase(const SweepSpec& spec) { return run_sweep(spec, true); }

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << SweepRow::csv_header() << "\n";
  for (const auto& r : rows) out << r.csv() << "\n";
}

// ------------------------------------------------------------------ tracer

TracerResult run_tracer(const Rat& rho, int tau, TracerDirection dir, int L) {
  if (L < kMinRingLength) throw std::invalid_argument("ring too short");
  const Rat flow_count = rho * Rat(L);
  if (flow_count.denominator() != 1)
    throw std::invalid_argument("rho*L must be an integer");
  const int n_flow = static_cast<int>(flow_count.numerator());

  TracerResult res;
  res.tau = tau;
  res.L = L;
  res.direction = dir;
  res.flow_density = rho;
  res.predicted = tracer_velocity(rho, tau, dir);

  RingConfig cfg = dir == TracerDirection::Against ? even_ring(tau, L, 1, n_flow)
                                                   : even_ring(tau, L, n_flow, 0);
  const VelocityPair v = average_velocity(cfg);
  if (dir == TracerDirection::Against) {
    if (!v.v_pos) throw std::logic_error("tracer velocity missing");
    res.measured = *v.v_pos;
    res.note = "tracer occupies 1/L of the ring; the limit curve assumes zero tracer density";
  } else {
    if (!v.v_pos) throw std::invalid_argument("with-flow tracer needs rho > 0");
    res.measured = *v.v_pos;
    if (rho > Rat(1, 2))
      res.note = "dense branch measured as (1-rho)/rho; a printed 1/rho would exceed 1";
  }
  if (!res.predicted) res.note = "flow density inside the hysteresis window: no prediction";
  return res;
}

// ---------------------------------------------------------- hypothesis scan

namespace {

bool only_trivial_on_cycle(const RingConfig& cfg, long long horizon, ScanFinding* out) {
  CycleOptions copt;
  copt.max_steps = horizon;
  ClusterHistory hist;
  try {
    hist = cluster_history(cfg, -1, copt);
  } catch (const std::runtime_error&) {
    return false; // no cycle within budget: not a usable witness
  }
  const long long t0 = hist.cycle.transient;
  int trivial = 0;
  for (const auto& rec : hist.clusters) {
    const bool on_cycle = rec.death < 0 || rec.death > t0;
    if (!on_cycle) continue;
    if (!rec.trivial) return false;
    ++trivial;
  }
  out->transient = t0;
  out->rel_period = hist.cycle.rel_period;
  out->n_trivial = trivial;
  out->config = format_config(cfg, TraceStyle::Numeric);
  return true;
}

// Family layout with the requested counts and length, if one exists.
std::optional<RingConfig> family_layout(Family fam, int tau, int n_pos, int n_neg, int L) {
  const int m = n_neg, n = n_pos - n_neg;
  if (n < 0 || n + m < 1) return std::nullopt;
  const int base = fam == Family::Free1 ? (tau + 1) * n + 2 * m : (tau + 2) * n + 3 * m;
  const int rest = L - base;
  if (rest < 0 || rest % 2 != 0) return std::nullopt;
  if (n == 0 && rest != 0) return std::nullopt;
  FamilySpec spec;
  spec.family = fam;
  spec.tau = tau;
  spec.m = m;
  spec.ks.assign(n, 0);
  if (n > 0) spec.ks[0] = rest / 2;
  if (spec.period() != L) return std::nullopt;
  if (L < kMinRingLength) return std::nullopt;
  return gen_family(spec);
}

// Enumerate all placements of the +-1 particles when the count is small.
template <typename Fn>
bool enumerate_placements(int L, int n_pos, int n_neg, Fn&& fn) {
  if (n_pos < 1) return false;
  // Site 0 is pinned to a positive, quotienting out rotations.
  std::vector<SiteState> cells(L, 0);
  std::function<bool(int, int)> place_neg = [&](int start, int left) -> bool {
    if (left == 0) return fn(cells);
    for (int s = start; s < L; ++s) {
      if (cells[s] != 0) continue;
      cells[s] = -1;
      if (place_neg(s + 1, left - 1)) return true;
      cells[s] = 0;
    }
    return false;
  };
  std::function<bool(int, int)> place_pos = [&](int start, int left) -> bool {
    if (left == 0) return place_neg(1, n_neg);
    for (int s = start; s < L; ++s) {
      if (cells[s] != 0) continue;
      cells[s] = 1;
      if (place_pos(s + 1, left - 1)) return true;
      cells[s] = 0;
    }
    return false;
  };
  cells[0] = 1; // rotation anchor
  return place_pos(1, n_pos - 1);
}

double log_choose(int n, int k) {
  double s = 0;
  for (int i = 0; i < k; ++i) s += std::log2(double(n - i)) - std::log2(double(i + 1));
  return s;
}

} // namespace

std::optional<ScanFinding> scan_class(const ScanSpec& spec, int L, int n_pos, int n_neg,
                                      const std::vector<ScanFinding>& prior) {
  ScanFinding f;
  f.L = L;
  f.n_pos = n_pos;
  f.n_neg = n_neg;
  f.rho = Rat(n_pos, L);
  f.rho_tilde = Rat(n_neg, L);

  // Free-flow family layouts first: they carry no clusters at all.
  for (Family fam : {Family::Free1, Family::Free2}) {
    if (auto cfg = family_layout(fam, spec.tau, n_pos, n_neg, L)) {
      if (only_trivial_on_cycle(*cfg, spec.horizon, &f)) {
        f.seed_kind = "family";
        return f;
      }
    }
  }

  // Tile a witness found for a proportional smaller class.
  for (const auto& p : prior) {
    if (L % p.L != 0) continue;
    const int k = L / p.L;
    if (p.n_pos * k != n_pos || p.n_neg * k != n_neg) continue;
    const ParseResult parsed = parse_config(p.config, spec.tau);
    std::vector<SiteState> cells;
    for (int rep = 0; rep < k; ++rep)
      cells.insert(cells.end(), parsed.config.cells.begin(), parsed.config.cells.end());
    RingConfig tiled(spec.tau, std::move(cells));
    if (only_trivial_on_cycle(tiled, spec.horizon, &f)) {
      f.seed_kind = "replicated";
      return f;
    }
  }

  // Exhaustive over rotation classes when small, else seeded random tries.
  const double log_count = log_choose(L - 1, n_pos - 1) + log_choose(L - n_pos, n_neg);
  if (n_pos >= 1 && log_count <= 14.0) { // at most ~16k placements
    bool found = false;
    enumerate_placements(L, n_pos, n_neg, [&](const std::vector<SiteState>& cells) {
      RingConfig cfg(spec.tau, cells);
      if (only_trivial_on_cycle(cfg, spec.horizon, &f)) {
        found = true;
        return true;
      }
      return false;
    });
    if (found) {
      f.seed_kind = "enumerated";
      return f;
    }
    return std::nullopt; // class exhausted
  }

  std::mt19937_64 rng(spec.seed ^ (static_cast<unsigned long long>(L) << 20) ^
                      (static_cast<unsigned long long>(n_pos) << 10) ^ n_neg);
  std::vector<int> sites(L);
  for (int i = 0; i < L; ++i) sites[i] = i;
  for (int attempt = 0; attempt < spec.tries; ++attempt) {
    std::shuffle(sites.begin(), sites.end(), rng);
    std::vector<SiteState> cells(L, 0);
    for (int i = 0; i < n_pos; ++i) cells[sites[i]] = 1;
    for (int i = 0; i < n_neg; ++i) cells[sites[n_pos + i]] = -1;
    RingConfig cfg(spec.tau, std::move(cells));
    if (only_trivial_on_cycle(cfg, spec.horizon, &f)) {
      f.seed_kind = "random";
      return f;
    }
  }
  return std::nullopt;
}

std::vector<ScanFinding> hypothesis_scan(const ScanSpec& spec) {
  std::vector<ScanFinding> findings;
  for (int L = spec.L_min; L <= spec.L_max; ++L) {
    for (int n_pos = 1; n_pos < L; ++n_pos) {
      for (int n_neg = 1; n_pos + n_neg <= L; ++n_neg) {
        const RegionLabel label =
            classify_region(Rat(n_pos, L), Rat(n_neg, L), spec.tau);
        if (label.region != Region::H) continue;
        if (auto f = scan_class(spec, L, n_pos, n_neg, findings))
          findings.push_back(*f);
      }
    }
  }
  return findings;
}

std::string scan_csv_header() {
  return "L,n_pos,n_neg,rho,rho_tilde,seed_kind,transient,rel_period,n_trivial,config";
}

std::string scan_csv(const ScanFinding& f) {
  std::string s;
  s += std::to_string(f.L) + "," + std::to_string(f.n_pos) + "," + std::to_string(f.n_neg);
  s += "," + to_string(f.rho) + "," + to_string(f.rho_tilde) + "," + f.seed_kind;
  s += "," + std::to_string(f.transient) + "," + std::to_string(f.rel_period);
  s += "," + std::to_string(f.n_trivial) + ",\"" + f.config + "\"";
  return s;
}

} // namespace latgas
