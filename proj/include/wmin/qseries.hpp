#pragma once

// Truncated generalized q-series with Laurent-polynomial coefficients.
//
// A QSeries represents  sum_e  c_e(z) q^e  where e runs over rationals of the
// form offset + n / L (n a nonnegative integer, L a fixed positive integer)
// and each coefficient c_e is a multivariate Laurent polynomial in the formal
// exponential variables.  The series is truncated: only exponents with
// offset <= e < offset + order are stored, and `order` is an exclusive bound.
// Arithmetic tracks the largest truncation order that remains valid.

#include "wmin/laurent.hpp"
#include "wmin/rat.hpp"

#include <functional>
#include <map>
#include <string>

namespace wmin {

class QSeries {
 public:
  QSeries() : arity_(0), L_(1), offset_(0), norder_(0) {}

  // Zero series on the grid offset + Z/L, truncated at the given order.
  static QSeries zero(int arity, long L, const Rat& offset, const Rat& order);

  // The constant series 1 (offset 0).
  static QSeries one(int arity, long L, const Rat& order);

  int arity() const { return arity_; }
  long denom_lcm() const { return L_; }
  const Rat& offset() const { return offset_; }
  Rat order() const { return offset_ + rat(norder_, L_); }     // exclusive bound
  Rat rel_order() const { return rat(norder_, L_); }           // order - offset
  long nsteps() const { return norder_; }
  const std::map<long, Laurent>& raw() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  // Coefficient of q^e (zero if absent; throws if e is outside the truncation
  // range or off the grid).
  Laurent coeff(const Rat& e) const;

  // Adds t * q^e; e must lie on the grid and inside the truncation range
  // (contributions at or above the order bound are silently dropped).
  void add_at(const Rat& e, const Laurent& t);

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  QSeries operator-() const;
  QSeries& operator*=(const Rat& s);
  friend QSeries operator*(QSeries a, const Rat& s) { return a *= s; }
  friend QSeries operator*(const Rat& s, QSeries a) { return a *= s; }

  // Truncated product: offsets add, relative orders combine as the minimum.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  // Multiply by the single term s * q^t * e^{m}.
  QSeries mul_term(const Rat& s, const Rat& t, const ExpVec& m) const;

  // In-place multiply by the sparse factor (1 + s q^t e^{m}), t >= 0.
  // Much cheaper than a general product; used for theta/eta-style products.
  void mul_factor(const Rat& s, const Rat& t, const ExpVec& m);

  // In-place exact division by (1 + s q^t e^{m}).  For t > 0 this is a linear
  // recurrence in the q-direction; for t = 0, m != 0 every q-coefficient is
  // divided exactly by the Laurent binomial (throws if not divisible); for
  // t = 0, m = 0 it is a scalar division by 1 + s.
  void div_factor(const Rat& s, const Rat& t, const ExpVec& m);

  // Multiplicative inverse.  Requires the lowest stored coefficient to be a
  // single Laurent term (a unit).  The result has offset -e0 where e0 is the
  // exponent of that lowest term, and the same relative order as *this.
  QSeries inverse() const;

  // Restrict to exponents < new_order.
  QSeries truncated(const Rat& new_order) const;

  // Substitute variable i by (variable i) * q^t: a term z^a q^e becomes
  // z^a q^{e + t a}.  Terms pushed below the offset or at/above the order
  // bound are dropped; the caller is responsible for choosing a large enough
  // input order (see the identity substitution-chain tests).
  QSeries shift_var(int i, const Rat& t) const;

  // Substitute every variable by its inverse.
  QSeries invert_vars() const;

  // Keep only Laurent terms with all exponents in [-w, w].
  QSeries window(long w) const;

  // Rewrites on a coarser/finer grid; new_L must be a multiple of every
  // denominator actually present.
  QSeries regrid(long new_L) const;

  bool equal_on_common_range(const QSeries& o) const;

  // Canonical JSON (sorted by q-exponent, then lexicographic exponent vector).
  std::string to_json() const;

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  friend void align(QSeries& a, QSeries& b);

  int arity_;
  long L_;
  Rat offset_;
  long norder_;               // exclusive bound on stored index
  std::map<long, Laurent> c_;  // index n -> coefficient of q^{offset + n/L}
};

// Geometric expansion of 1/(1 + s q^t e^{m}) as a QSeries truncated at
// `order`, with grid denominator L.
//   t > 0:  sum_{j>=0} (-s)^j q^{jt} e^{jm}
//   t < 0:  (s^{-1} q^{-t} e^{-m}) * sum_{j>=0} (-s)^{-j} q^{-jt} e^{-jm}
//   t = 0, m != 0: expands in the direction that makes the monomial
//           lexicographically negative (the "small" direction of the lattice
//           order); t = 0, m = 0 gives the scalar 1/(1+s).
QSeries expand_inverse_factor(int arity, long L, const Rat& s, const Rat& t,
                              const ExpVec& m, const Rat& order);

}  // namespace wmin
