#include "latgas/dynamics.hpp"

#include <stdexcept>

namespace latgas {

namespace {

[[noreturn]] void bad_input(const std::vector<Violation>& v) {
  std::string msg = "inadmissible configuration:";
  for (const auto& x : v) {
    msg += " site " + std::to_string(x.site) + " (" + to_string(x.kind) + ")";
  }
  throw std::invalid_argument(msg);
}

} // namespace

Stepper::Stepper(const RingConfig& cfg)
    : tau_(cfg.tau), L_(cfg.length()), cur_(cfg.cells), nxt_(cfg.cells),
      handled_(cfg.length(), 0) {}

void Stepper::advance() {
  const int L = L_, tau = tau_;
  const auto& x = cur_;
  auto& y = nxt_;
  y = x;
  std::fill(handled_.begin(), handled_.end(), 0);
  events_.clear();

  auto wrap = [L](int i) { return i >= L ? i - L : (i < 0 ? i + L : i); };
  auto write = [&](int i, SiteState v) {
    if (handled_[i]) throw std::logic_error("conflicting writes in step map");
    y[i] = v;
    handled_[i] = 1;
  };

  // Phase 1: advance interacting pairs; exchange past the threshold. Every
  // pair is visited through its positive member.
  for (int i = 0; i < L; ++i) {
    if (x[i] < 2) continue;
    const int r1 = x[wrap(i + 1)];
    if (r1 == -x[i]) {
      const int j = wrap(i + 1);
      if (x[i] + 1 > tau) {
        write(i, -1);
        write(j, 1);
        events_.push_back({EventType::ShortSwap, i, j});
      } else {
        write(i, static_cast<SiteState>(x[i] + 1));
        write(j, static_cast<SiteState>(-(x[i] + 1)));
        events_.push_back({EventType::Wait, i, j});
      }
    } else if (r1 == 0 && x[wrap(i + 2)] == -x[i]) {
      const int j = wrap(i + 2);
      if (x[i] + 1 > tau + 1) {
        write(i, -1);
        write(j, 1);
        events_.push_back({EventType::LongSwap, i, j});
      } else {
        write(i, static_cast<SiteState>(x[i] + 1));
        write(j, static_cast<SiteState>(-(x[i] + 1)));
        events_.push_back({EventType::Wait, i, j});
      }
    } else {
      throw std::invalid_argument("interacting positive without partner at site " +
                                  std::to_string(i));
    }
  }
  for (int i = 0; i < L; ++i) {
    if (x[i] <= -2 && !handled_[i])
      throw std::invalid_argument("interacting negative without partner at site " +
                                  std::to_string(i));
  }

  // Phase 2: positives at state 1.
  for (int i = 0; i < L; ++i) {
    if (x[i] != 1) continue;
    const int i1 = wrap(i + 1), i2 = wrap(i + 2);
    const int a = x[i1], b = x[i2];
    if (a == 0 && b != -1) {
      write(i, 0);
      write(i1, 1);
      events_.push_back({EventType::Moved, i, i1});
    } else if (a == 0 && b == -1) {
      // New long interaction; threshold tau+1 >= 2 always holds.
      write(i, 2);
      write(i2, -2);
      events_.push_back({EventType::LongStart, i, i2});
    } else if (a == -1) {
      if (2 > tau) {
        // tau = 1: a short interaction has no intermediate state.
        write(i, -1);
        write(i1, 1);
        events_.push_back({EventType::ShortStart, i, i1});
        events_.push_back({EventType::ShortSwap, i, i1});
      } else {
        write(i, 2);
        write(i1, -2);
        events_.push_back({EventType::ShortStart, i, i1});
      }
    } else if (a >= 1) {
      events_.push_back({EventType::SimpleBlock, i, +1});
    } else {
      // a <= -2 cannot face a state-1 positive in an admissible configuration.
      throw std::invalid_argument("positive at site " + std::to_string(i) +
                                  " faces a mid-interaction negative");
    }
  }

  // Phase 3: remaining -1 particles.
  for (int i = 0; i < L; ++i) {
    if (x[i] != -1 || handled_[i]) continue;
    const int i1 = wrap(i - 1);
    const int c = x[i1];
    if (c == 0) {
      write(i1, -1);
      write(i, 0);
      events_.push_back({EventType::Moved, i, i1});
    } else if (c <= -1) {
      events_.push_back({EventType::SimpleBlock, i, -1});
    } else {
      // c = +1 is consumed by phase 2; c >= 2 is inadmissible next to a -1.
      throw std::invalid_argument("negative at site " + std::to_string(i) +
                                  " in impossible neighborhood");
    }
  }

  cur_.swap(nxt_);
}

StepOutcome step(const RingConfig& cfg) {
  if (auto v = check_admissible(cfg); !v.empty()) bad_input(v);
  Stepper st(cfg);
  st.advance();
  return {st.config(), st.events()};
}

RingConfig evolve(RingConfig cfg, long long t) {
  if (t < 0) throw std::invalid_argument("negative time");
  if (auto v = check_admissible(cfg); !v.empty()) bad_input(v);
  Stepper st(cfg);
  for (long long k = 0; k < t; ++k) st.advance();
  return st.config();
}

RingConfig reflect_dual(const RingConfig& cfg) {
  const int L = cfg.length();
  std::vector<SiteState> out(L);
  for (int i = 0; i < L; ++i) out[i] = static_cast<SiteState>(-cfg.cells[L - 1 - i]);
  return RingConfig(cfg.tau, std::move(out));
}

} // namespace latgas
