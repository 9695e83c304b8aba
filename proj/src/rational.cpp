#include "latgas/rational.hpp"

#include <cstdlib>

namespace latgas {

std::string to_string(const Rat& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  auto parse_ll = [](const std::string& t, long long& out) {
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(t.c_str(), &end, 10);
    return end && *end == '\0';
  };
  long long num = 0, den = 1;
  if (slash == std::string::npos) {
    if (!parse_ll(s, num)) return std::nullopt;
  } else {
    if (!parse_ll(s.substr(0, slash), num)) return std::nullopt;
    if (!parse_ll(s.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rat(num, den);
}

} // namespace latgas
