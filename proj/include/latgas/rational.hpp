#pragma once
// Exact rational arithmetic for densities and velocities. All observables in
// this library are rationals with small numerators; long long never overflows
// at the ring sizes we handle.

#include <boost/rational.hpp>

#include <optional>
#include <string>

namespace latgas {

using Rat = boost::rational<long long>;

// Serialized as "p/q" in lowest terms, denominator always present ("3/1").
std::string to_string(const Rat& r);

// Accepts "p/q" and bare integers "p". Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& s);

} // namespace latgas
