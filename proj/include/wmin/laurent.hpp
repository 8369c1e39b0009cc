#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
//
// A Laurent polynomial has a fixed arity (number of formal exponential
// variables); terms map integer exponent vectors to nonzero rationals.
// The zero polynomial stores no terms.  std::map keys give a canonical
// (lexicographic) term order, which serialization and comparison rely on.

#include "wmin/rat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace wmin {

using ExpVec = std::vector<long>;

inline ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec expvec_neg(const ExpVec& a) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline ExpVec expvec_scale(const ExpVec& a, long k) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline bool expvec_is_zero(const ExpVec& a) {
  return std::all_of(a.begin(), a.end(), [](long e) { return e == 0; });
}

class Laurent {
 public:
  explicit Laurent(int arity = 0) : arity_(arity) {}

  static Laurent constant(int arity, const Rat& c) {
    Laurent p(arity);
    if (c != 0) p.terms_[ExpVec(arity, 0)] = c;
    return p;
  }

  static Laurent monomial(int arity, const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != arity)
      throw std::invalid_argument("Laurent::monomial: arity mismatch");
    Laurent p(arity);
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  bool is_single_term() const { return terms_.size() == 1; }

  Rat coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != arity_)
      throw std::invalid_argument("Laurent::add_term: arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  Laurent operator-() const {
    Laurent r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_arity(b);
    Laurent r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(expvec_add(ea, eb), ca * cb);
    return r;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }
  friend Laurent operator*(const Rat& c, Laurent a) { return a *= c; }

  // Multiply by the single term c * e^{m}.
  Laurent mul_monomial(const ExpVec& m, const Rat& c) const {
    Laurent r(arity_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(expvec_add(e, m), v * c);
    return r;
  }

  // Substitute each variable by the inverse of itself (e -> -e).
  Laurent invert_vars() const {
    Laurent r(arity_);
    for (const auto& [e, v] : terms_) r.terms_.emplace(expvec_neg(e), v);
    return r;
  }

  // Exact division by (1 + c * e^{m}) with m != 0.  The quotient is found by
  // resolving each residue class of exponents modulo the direction m
  // independently (along a class the divisor acts as a univariate binomial).
  // Throws if the division is not exact.
  Laurent divide_exact_binomial(const ExpVec& m, const Rat& c) const;

  bool operator==(const Laurent& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Drop all terms with an exponent outside [-w, w] in some coordinate.
  Laurent window(long w) const {
    Laurent r(arity_);
    for (const auto& [e, v] : terms_) {
      bool keep = true;
      for (long x : e)
        if (x > w || x < -w) {
          keep = false;
          break;
        }
      if (keep) r.terms_.emplace(e, v);
    }
    return r;
  }

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  void check_arity(const Laurent& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Laurent: arity mismatch");
  }

  int arity_;
  std::map<ExpVec, Rat> terms_;
};

}  // namespace wmin
