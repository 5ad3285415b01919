#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace monolab {

// Exact rational scalar. cpp_rational keeps the fraction normalized with a
// positive denominator, which is exactly the invariant we need.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rat(BigInt(num), BigInt(den));
}

// Parses "p/q" or "p". Used by every JSON surface.
Rat parse_rat(const std::string& s);

// Renders "p/q", or just "p" when q == 1. Loss-free round trip with parse_rat.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

// Point / vector with exact coordinates. Ambient dimension is the size.
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
Vec neg(const Vec& a);
bool is_zero(const Vec& a);
Rat norm_sq(const Vec& a);

std::string vec_to_string(const Vec& v);

// Largest rational m/2^k with m/2^k <= x (round_down) or >= x (round_up),
// for k = precision_bits. Used where algebraic endpoints must be replaced
// by rational bounds with a known rounding direction.
Rat dyadic_round_down(const Rat& x, unsigned precision_bits);
Rat dyadic_round_up(const Rat& x, unsigned precision_bits);

// Rational lower/upper bounds on sqrt(x), x >= 0, at 2^-precision_bits.
Rat sqrt_lower(const Rat& x, unsigned precision_bits);
Rat sqrt_upper(const Rat& x, unsigned precision_bits);

}  // namespace monolab
