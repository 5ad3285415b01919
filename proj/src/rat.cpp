#include "monolab/rat.hpp"

#include <sstream>

namespace monolab {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec neg(const Vec& a) { return scale(Rat(-1), a); }

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Rat norm_sq(const Vec& a) { return dot(a, a); }

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

Rat dyadic_round_down(const Rat& x, unsigned precision_bits) {
  BigInt scale = BigInt(1) << precision_bits;
  BigInt num = numerator(x) * scale;
  BigInt den = denominator(x);
  BigInt q = num / den;
  // integer division truncates toward zero; fix up for negatives
  if (q * den > num) q -= 1;
  return Rat(q, scale);
}

Rat dyadic_round_up(const Rat& x, unsigned precision_bits) {
  return -dyadic_round_down(-x, precision_bits);
}

Rat sqrt_lower(const Rat& x, unsigned precision_bits) {
  if (x < 0) throw std::invalid_argument("sqrt_lower: negative input");
  if (x == 0) return 0;
  // floor(sqrt(x * 4^k)) / 2^k
  BigInt scale = BigInt(1) << (2 * precision_bits);
  BigInt v = (numerator(x) * scale) / denominator(x);
  BigInt r = sqrt(v);
  return Rat(r, BigInt(1) << precision_bits);
}

Rat sqrt_upper(const Rat& x, unsigned precision_bits) {
  if (x < 0) throw std::invalid_argument("sqrt_upper: negative input");
  if (x == 0) return 0;
  BigInt scale = BigInt(1) << (2 * precision_bits);
  BigInt num = numerator(x) * scale;
  BigInt den = denominator(x);
  BigInt v = num / den;
  BigInt r = sqrt(v);
  while (r * r * den < num) r += 1;
  return Rat(r, BigInt(1) << precision_bits);
}

}  // namespace monolab
