#include "latgas/formats.hpp"

#include "latgas/dynamics.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace latgas {

namespace {

std::vector<SiteState> parse_symbolic(const std::string& text) {
  std::vector<SiteState> cells;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case '+': cells.push_back(1); break;
      case '-': cells.push_back(-1); break;
      case '.': cells.push_back(0); break;
      default:
        throw std::invalid_argument(std::string("bad symbol '") + c + "'");
    }
  }
  return cells;
}

std::vector<SiteState> parse_numeric(const std::string& text, int tau) {
  std::vector<SiteState> cells;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (!end || *end != '\0')
      throw std::invalid_argument("bad token '" + tok + "'");
    if (std::abs(v) > tau + 1)
      throw std::invalid_argument("state " + tok + " exceeds tau+1");
    cells.push_back(static_cast<SiteState>(v));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      tok.push_back(c);
    }
  }
  flush();
  return cells;
}

} // namespace

ParseResult parse_config(const std::string& text, int tau) {
  bool symbolic = false;
  for (char c : text) {
    if (c == '+' || c == '.') { symbolic = true; break; }
    if (std::isdigit(static_cast<unsigned char>(c))) break;
  }
  auto cells = symbolic ? parse_symbolic(text) : parse_numeric(text, tau);
  RingConfig cfg(tau, std::move(cells)); // validates range and length
  ParseResult res{std::move(cfg), {}};
  res.violations = check_admissible(res.config);
  return res;
}

std::string format_config(const RingConfig& cfg, TraceStyle style) {
  std::string out;
  if (style == TraceStyle::Symbolic) {
    out.reserve(cfg.length());
    for (SiteState s : cfg.cells) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '.'));
  } else {
    for (int i = 0; i < cfg.length(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(static_cast<int>(cfg.cells[i]));
    }
  }
  return out;
}

std::vector<std::string> trace_rows(const RingConfig& cfg, long long steps, TraceStyle style) {
  if (auto v = check_admissible(cfg); !v.empty())
    throw std::invalid_argument("trace of inadmissible configuration");
  std::vector<std::string> rows;
  rows.reserve(static_cast<size_t>(steps) + 1);
  Stepper st(cfg);
  rows.push_back(format_config(st.config(), style));
  for (long long t = 0; t < steps; ++t) {
    st.advance();
    rows.push_back(format_config(st.config(), style));
  }
  return rows;
}

std::string format_trace(const RingConfig& cfg, long long steps, TraceStyle style) {
  std::string out = "tau=" + std::to_string(cfg.tau) + " L=" + std::to_string(cfg.length()) + "\n";
  for (const auto& row : trace_rows(cfg, steps, style)) {
    out += row;
    out.push_back('\n');
  }
  return out;
}

} // namespace latgas
