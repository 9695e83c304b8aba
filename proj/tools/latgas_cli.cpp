// Command-line driver: golden-trace verification, single runs, diagram
// sweeps, tracer experiments, family generation and the only-trivial-cluster
// scan. Exit codes: 0 ok, 1 verification mismatch, 2 bad input.

#include "latgas/builtin_traces.hpp"
#include "latgas/clusters.hpp"
#include "latgas/dynamics.hpp"
#include "latgas/formats.hpp"
#include "latgas/sweep.hpp"
#include "latgas/theory.hpp"
#include "latgas/tracking.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace latgas;

namespace {

std::string read_config_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

Rat parse_rat_or_throw(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw CLI::ValidationError("expected a rational like 3/8, got '" + s + "'");
  return *r;
}

std::ostream& sink(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int cmd_verify() {
  bool ok = true;
  for (const GoldenTrace& g : golden_traces()) {
    const ParseResult seed = parse_config(g.rows.front(), g.tau);
    const auto rows = trace_rows(seed.config, static_cast<long long>(g.rows.size()) - 1,
                                 g.style);
    bool match = rows.size() == g.rows.size();
    size_t first_bad = 0;
    for (size_t t = 0; match && t < rows.size(); ++t) {
      if (rows[t] != g.rows[t]) {
        match = false;
        first_bad = t;
      }
    }
    if (match) {
      std::cout << "PASS " << g.name << " (" << g.rows.size() << " rows)\n";
    } else {
      ok = false;
      std::cout << "FAIL " << g.name << " first mismatch at t=" << first_bad << "\n"
                << "  expected: " << g.rows[first_bad] << "\n"
                << "  got:      " << rows[first_bad] << "\n";
    }
  }

  // Attraction-boundary example: the three-particle periodic pattern has an
  // unbounded outer basin (per-lap weight sum +1) and a finite inner bound
  // (per-lap sum -1).
  {
    const RingConfig ring = golden_protocluster_ring();
    const BaBounds b = ba_bounds_span(ring, 0, 3, ring.tau, ring.tau);
    long long outer_lap = 0, inner_lap = 0;
    for (SiteState s : ring.cells) {
      outer_lap += s > 0 ? ring.tau + 1 : (s < 0 ? -ring.tau : -1);
      inner_lap += s > 0 ? ring.tau : (s < 0 ? -ring.tau : -1);
    }
    const bool good = b.outer.unbounded && !b.inner.unbounded && outer_lap == 1 &&
                      inner_lap == -1;
    if (good) {
      std::cout << "PASS protocluster-basin (outer j=" << to_string(b.outer)
                << ", inner j'=" << to_string(b.inner) << ")\n";
    } else {
      ok = false;
      std::cout << "FAIL protocluster-basin\n";
    }
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic two-species lattice-gas simulator"};
  app.require_subcommand(1);

  // verify
  app.add_subcommand("verify", "Replay the golden traces byte-for-byte");

  // run
  auto* run = app.add_subcommand("run", "Evolve a configuration and print the trace");
  int run_tau = 2;
  std::string run_config, run_style = "numeric", run_out;
  long long run_steps = 15;
  run->add_option("--tau", run_tau, "waiting time")->check(CLI::PositiveNumber);
  run->add_option("--config", run_config, "configuration text or file")->required();
  run->add_option("--steps", run_steps, "steps to evolve");
  run->add_option("--style", run_style, "symbolic|numeric");
  run->add_option("--out", run_out, "output path (default stdout)");

  // classify
  auto* cls = app.add_subcommand("classify", "Region and predictions for densities");
  std::string cls_rho, cls_rhot;
  int cls_tau = 2;
  cls->add_option("--rho", cls_rho, "positive density p/q")->required();
  cls->add_option("--rho-tilde", cls_rhot, "negative density p/q")->required();
  cls->add_option("--tau", cls_tau)->check(CLI::PositiveNumber);

  // sweeps
  auto add_sweep_opts = [](CLI::App* sc, SweepSpec* spec, std::string* out) {
    sc->add_option("--tau", spec->taus, "waiting times")->expected(-1);
    sc->add_option("--length", spec->lengths, "ring lengths")->expected(-1);
    sc->add_option("--grid", spec->grid, "density grid resolution");
    sc->add_option("--horizon-cap", spec->horizon_cap, "step budget per point");
    sc->add_option("--seed", spec->seed, "seed for randomized placements");
    sc->add_option("--threads", spec->threads, "worker threads (0 = auto)");
    sc->add_option("--out", *out, "CSV output path (default stdout)");
  };
  auto* swf = app.add_subcommand("sweep-fundamental", "Velocities over a density grid");
  SweepSpec swf_spec;
  std::string swf_out;
  add_sweep_opts(swf, &swf_spec, &swf_out);
  auto* swp = app.add_subcommand("sweep-phase", "Phase flags over a density grid");
  SweepSpec swp_spec;
  std::string swp_out;
  add_sweep_opts(swp, &swp_spec, &swp_out);

  // tracer
  auto* trc = app.add_subcommand("tracer", "Single tracer in a one-species flow");
  std::string trc_rho, trc_dir = "against";
  int trc_tau = 2, trc_L = 20;
  trc->add_option("--rho", trc_rho, "flow density p/q")->required();
  trc->add_option("--tau", trc_tau)->check(CLI::PositiveNumber);
  trc->add_option("--direction", trc_dir, "with|against");
  trc->add_option("--length", trc_L, "ring length");

  // families
  auto* fam = app.add_subcommand("families", "Generate a free-flow family member");
  std::string fam_name = "free1", fam_ks = "0";
  int fam_tau = 2, fam_m = 1;
  bool fam_check = false;
  fam->add_option("--family", fam_name, "free1|free2");
  fam->add_option("--tau", fam_tau)->check(CLI::PositiveNumber);
  fam->add_option("--ks", fam_ks, "comma-separated spacer counts");
  fam->add_option("--m", fam_m, "number of pair blocks");
  fam->add_flag("--check", fam_check, "simulate and report cycle observables");

  // hypothesis-scan
  auto* scan = app.add_subcommand("hypothesis-scan",
                                  "Search for only-trivial-cluster witnesses");
  ScanSpec scan_spec;
  std::string scan_out;
  scan->add_option("--lmax", scan_spec.L_max, "largest ring length");
  scan->add_option("--lmin", scan_spec.L_min, "smallest ring length");
  scan->add_option("--tau", scan_spec.tau)->check(CLI::PositiveNumber);
  scan->add_option("--horizon-cap,--horizon", scan_spec.horizon, "step budget per seed");
  scan->add_option("--seed", scan_spec.seed, "random seed");
  scan->add_option("--tries", scan_spec.tries, "random seeds per class");
  scan->add_option("--out", scan_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("verify")) return cmd_verify();

    if (app.got_subcommand("run")) {
      const ParseResult parsed = parse_config(read_config_arg(run_config), run_tau);
      for (const Violation& v : parsed.violations)
        std::cerr << "warning: site " << v.site << ": " << v.detail << "\n";
      if (!parsed.violations.empty()) {
        std::cerr << "configuration is not admissible\n";
        return 2;
      }
      const TraceStyle style =
          run_style == "symbolic" ? TraceStyle::Symbolic : TraceStyle::Numeric;
      std::ofstream file;
      sink(file, run_out) << format_trace(parsed.config, run_steps, style);
      return 0;
    }

    if (app.got_subcommand("classify")) {
      const Rat rho = parse_rat_or_throw(cls_rho), rhot = parse_rat_or_throw(cls_rhot);
      const RegionLabel label = classify_region(rho, rhot, cls_tau);
      std::cout << "region=" << to_string(label.region);
      if (label.region == Region::Boundary) std::cout << " line=" << label.boundary_line;
      std::cout << "\n";
      const VelocityPrediction p = predicted_velocities(rho, rhot, cls_tau);
      std::cout << "V_predicted=" << (p.v ? to_string(*p.v) : "unpredicted")
                << " Vt_predicted=" << (p.vt ? to_string(*p.vt) : "unpredicted") << "\n";
      const auto [rc, rcp] = critical_densities(rhot, cls_tau);
      std::cout << "rho_c=" << to_string(rc) << " rho_c_prime=" << to_string(rcp) << "\n";
      return 0;
    }

    if (app.got_subcommand("sweep-fundamental") || app.got_subcommand("sweep-phase")) {
      const bool phase = app.got_subcommand("sweep-phase");
      const SweepSpec& spec = phase ? swp_spec : swf_spec;
      const std::string& out_path = phase ? swp_out : swf_out;
      const auto rows = phase ? sweep_phase(spec) : sweep_fundamental(spec);
      std::ofstream file;
      auto& out = sink(file, out_path);
      out << SweepRow::csv_header() << "\n";
      for (const auto& r : rows) out << r.csv() << "\n";
      return 0;
    }

    if (app.got_subcommand("tracer")) {
      const Rat rho = parse_rat_or_throw(trc_rho);
      const TracerDirection dir =
          trc_dir == "with" ? TracerDirection::With : TracerDirection::Against;
      const TracerResult res = run_tracer(rho, trc_tau, dir, trc_L);
      std::cout << "direction=" << (dir == TracerDirection::With ? "with" : "against")
                << " tau=" << res.tau << " L=" << res.L
                << " flow_density=" << to_string(res.flow_density) << "\n";
      std::cout << "measured=" << to_string(res.measured) << " predicted="
                << (res.predicted ? to_string(*res.predicted) : "gap") << "\n";
      if (!res.note.empty()) std::cout << "note: " << res.note << "\n";
      return 0;
    }

    if (app.got_subcommand("families")) {
      FamilySpec spec;
      spec.family = fam_name == "free2" ? Family::Free2 : Family::Free1;
      spec.tau = fam_tau;
      spec.m = fam_m;
      std::stringstream ss(fam_ks);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) spec.ks.push_back(std::stoi(tok));
      const RingConfig cfg = gen_family(spec);
      const DensityPair d = family_densities(spec);
      std::cout << format_config(cfg, TraceStyle::Numeric) << "\n";
      std::cout << "L=" << cfg.length() << " rho=" << to_string(d.rho)
                << " rho_tilde=" << to_string(d.rho_tilde) << "\n";
      if (fam_check) {
        const CycleReport rep = detect_cycle(cfg);
        const PhaseMembership pm = phase_membership(cfg);
        std::cout << "transient=" << rep.transient << " period=" << rep.period
                  << " V=" << (rep.velocity_pos() ? to_string(*rep.velocity_pos()) : "n/a")
                  << " Vt=" << (rep.velocity_neg() ? to_string(*rep.velocity_neg()) : "n/a")
                  << " free+=" << pm.free_pos << " free-=" << pm.free_neg << "\n";
      }
      return 0;
    }

    if (app.got_subcommand("hypothesis-scan")) {
      const auto findings = hypothesis_scan(scan_spec);
      std::ofstream file;
      auto& out = sink(file, scan_out);
      out << scan_csv_header() << "\n";
      for (const auto& f : findings) out << scan_csv(f) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
