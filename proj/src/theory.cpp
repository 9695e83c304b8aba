#include "latgas/theory.hpp"

#include <numeric>
#include <stdexcept>

namespace latgas {

const char* to_string(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::H: return "H";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

RegionLabel classify_region(const Rat& rho, const Rat& rho_tilde, int tau) {
  if (tau < 1) throw std::invalid_argument("tau must be >= 1");
  if (rho < Rat(0) || rho_tilde < Rat(0) || rho + rho_tilde > Rat(1))
    throw std::domain_error("densities outside the triangle");
  const Rat t1(tau + 1), t2(tau + 2), tm(tau - 1), one(1);
  const Rat lhs1 = t1 * rho, lhs2 = t2 * rho;
  const Rat lhs3 = t1 * rho_tilde, lhs4 = t2 * rho_tilde;
  const Rat rhsp = one + tm * rho_tilde; // right side for positive-density lines
  const Rat rhsn = one + tm * rho;       // for negative-density lines
  if (lhs1 == rhsp) return {Region::Boundary, 1};
  if (lhs2 == rhsp) return {Region::Boundary, 2};
  if (lhs3 == rhsn) return {Region::Boundary, 3};
  if (lhs4 == rhsn) return {Region::Boundary, 4};
  if (lhs2 < rhsp && lhs4 < rhsn) return {Region::A, 0};
  if (lhs2 < rhsp && lhs3 > rhsn) return {Region::B, 0};
  if (lhs1 > rhsp && lhs4 < rhsn) return {Region::C, 0};
  return {Region::H, 0};
}

VelocityPrediction predicted_velocities(const Rat& rho, const Rat& rho_tilde, int tau) {
  const RegionLabel label = classify_region(rho, rho_tilde, tau);
  const Rat tm(tau - 1), one(1);
  VelocityPrediction out;
  switch (label.region) {
    case Region::A:
      out.v = (one + tm * (rho - rho_tilde)) / (one + tm * (rho + rho_tilde));
      out.vt = (one + tm * (rho_tilde - rho)) / (one + tm * (rho + rho_tilde));
      break;
    case Region::B:
      out.v = Rat(1, tau);
      out.vt = Rat(1, tau) * (one / rho_tilde - one);
      break;
    case Region::C:
      out.v = Rat(1, tau) * (one / rho - one);
      out.vt = Rat(1, tau);
      break;
    default:
      break; // H and boundaries carry no prediction
  }
  return out;
}

std::pair<Rat, Rat> critical_densities(const Rat& rho_tilde, int tau) {
  if (rho_tilde < Rat(0) || rho_tilde > Rat(1))
    throw std::domain_error("rho_tilde outside [0,1]");
  const Rat num = Rat(1) + rho_tilde * Rat(tau - 1);
  return {num / Rat(tau + 2), num / Rat(tau + 1)};
}

IntervalFlags classify_interval(const DensityInterval& di, int tau) {
  if (di.rho_lo > di.rho_hi || di.rhot_lo > di.rhot_hi)
    throw std::invalid_argument("malformed density interval");
  if (di.rho_lo < Rat(0) || di.rhot_lo < Rat(0) || di.rho_hi + di.rhot_hi > Rat(1))
    throw std::domain_error("interval outside the triangle");
  const Rat t1(tau + 1), t2(tau + 2), tm(tau - 1), one(1);
  IntervalFlags f;
  f.free_pos = t2 * di.rho_hi < one + tm * di.rhot_lo;
  f.free_neg = t2 * di.rhot_hi < one + tm * di.rho_lo;
  f.jam_pos = t1 * di.rho_lo > one + tm * di.rhot_hi;
  f.jam_neg = t1 * di.rhot_lo > one + tm * di.rho_hi;
  return f;
}

// ------------------------------------------------------------ families

int FamilySpec::N() const { return std::accumulate(ks.begin(), ks.end(), 0); }

int FamilySpec::period() const {
  const int base = family == Family::Free1 ? (tau + 1) * n() + 2 * m
                                           : (tau + 2) * n() + 3 * m;
  return base + 2 * N();
}

RingConfig gen_family(const FamilySpec& spec) {
  if (spec.tau < 1) throw std::invalid_argument("tau must be >= 1");
  if (spec.n() + spec.m < 1) throw std::invalid_argument("empty family spec");
  for (int k : spec.ks)
    if (k < 0) throw std::invalid_argument("spacer count must be >= 0");
  std::vector<SiteState> cells;
  cells.reserve(spec.period());
  const int gap = spec.family == Family::Free1 ? spec.tau : spec.tau + 1;
  for (int k : spec.ks) {
    cells.push_back(1);
    cells.insert(cells.end(), gap + 2 * k, 0);
  }
  for (int j = 0; j < spec.m; ++j) {
    cells.push_back(1);
    if (spec.family == Family::Free2) cells.push_back(0);
    cells.push_back(-1);
  }
  return RingConfig(spec.tau, std::move(cells)); // rejects rings below minimum length
}

DensityPair family_densities(const FamilySpec& spec) {
  const int L = spec.period();
  return {Rat(spec.n() + spec.m, L), Rat(spec.m, L)};
}

// ---------------------------------------------------------- active tracer

std::optional<Rat> tracer_velocity(const Rat& rho, int tau, TracerDirection dir) {
  if (rho < Rat(0) || rho > Rat(1)) throw std::domain_error("rho outside [0,1]");
  if (tau < 1) throw std::invalid_argument("tau must be >= 1");
  const Rat one(1), tm(tau - 1);
  if (dir == TracerDirection::With) {
    if (rho <= Rat(1, 2)) return one;
    return (one - rho) / rho;
  }
  if (rho < Rat(1, tau + 2)) return (one - tm * rho) / (one + tm * rho);
  if (rho > Rat(1, tau + 1)) return Rat(1, tau);
  return std::nullopt; // hysteresis window, no prediction
}

} // namespace latgas
