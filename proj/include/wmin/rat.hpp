#pragma once

// Exact rational arithmetic, backed by GMP's mpq_class.
//
// All numeric data in this library (levels, weights, series coefficients,
// q-exponents) is represented exactly; no floating point is used anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wmin {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of a rational number as an integer.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return z.get_si();
}

// Smallest integer n with n*n >= r (r >= 0); used for lattice box bounds.
inline Int isqrt_ceil(const Rat& r) {
  if (r < 0) throw std::invalid_argument("isqrt_ceil: negative argument");
  Int n = rat_ceil(r);
  Int s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  while (s * s < n) ++s;
  return s;
}

// Parses "p" or "p/q" (optional leading '-'). Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  if (!check_int(num)) throw std::invalid_argument("parse_rat: bad numerator in '" + s + "'");
  Rat r;
  if (slash == std::string::npos) {
    r = Rat(Int(num));
  } else {
    std::string den = s.substr(slash + 1);
    if (!check_int(den) || den[0] == '-')
      throw std::invalid_argument("parse_rat: bad denominator in '" + s + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    r = Rat(Int(num), d);
    r.canonicalize();
  }
  return r;
}

// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline long lcm_long(long a, long b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
  return to_long(l);
}

}  // namespace wmin
