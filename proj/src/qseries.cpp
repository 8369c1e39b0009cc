#include "wmin/qseries.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace wmin {

// ---------------------------------------------------------------------------
// Laurent helpers

Laurent Laurent::divide_exact_binomial(const ExpVec& m, const Rat& c) const {
  if (expvec_is_zero(m)) throw std::invalid_argument("divide_exact_binomial: zero direction");
  if (c == 0) return *this;
  // Group exponents into classes e mod Z*m.  Within a class pick the
  // representative with the smallest multiple of m; along the class the
  // divisor (1 + c t) acts on the univariate polynomial in t = e^{m}.
  // Keys must be grouped so that e and e + k*m land together; we normalize by
  // subtracting k*m where k is chosen from the first nonzero coordinate of m.
  int pivot = -1;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  std::map<ExpVec, std::map<long, Rat>> classes;
  const long M = m[pivot] < 0 ? -m[pivot] : m[pivot];
  for (const auto& [e, v] : terms_) {
    // Canonical class representative: subtract k*m so that the pivot
    // coordinate lands in [0, |m[pivot]|).  Members of the same residue class
    // modulo Z*m then share the same base.
    long r = ((e[pivot] % M) + M) % M;
    long k = (e[pivot] - r) / m[pivot];
    ExpVec base = expvec_add(e, expvec_scale(m, -k));
    classes[base][k] += v;
  }
  Laurent out(arity_);
  for (auto& [base, line] : classes) {
    // Solve (1 + c t) * Q = P on the line, ascending in k:
    //   q_k + c q_{k-1} = p_k  =>  q_k = p_k - c q_{k-1}.
    std::map<long, Rat> q;
    if (line.empty()) continue;
    long kmin = line.begin()->first;
    long kmax = line.rbegin()->first;
    Rat carry(0);
    for (long k = kmin; ; ++k) {
      Rat p = 0;
      if (auto it = line.find(k); it != line.end()) p = it->second;
      Rat qk = p - c * carry;
      if (qk != 0) q[k] = qk;
      carry = qk;
      if (k >= kmax && carry == 0) break;
      if (k > kmax + static_cast<long>(line.size()) + 4096)
        throw std::runtime_error("divide_exact_binomial: not exactly divisible");
    }
    for (const auto& [k, v] : q) out.add_term(expvec_add(base, expvec_scale(m, k)), v);
  }
  return out;
}

std::string Laurent::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : terms_) {
    Rat a = v;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string name = i < vars.size() ? vars[i] : ("z" + std::to_string(i + 1));
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// QSeries

QSeries QSeries::zero(int arity, long L, const Rat& offset, const Rat& order) {
  if (L <= 0) throw std::invalid_argument("QSeries: denom_lcm must be positive");
  QSeries s;
  s.arity_ = arity;
  s.L_ = L;
  s.offset_ = offset;
  Rat n = order * L;
  if (!is_integer(n)) throw std::invalid_argument("QSeries: order not on grid");
  Rat rel = n - offset * L;
  if (!is_integer(rel)) throw std::invalid_argument("QSeries: offset not on grid");
  Int steps = rat_floor(rel);
  s.norder_ = steps < 0 ? 0 : to_long(steps);
  return s;
}

QSeries QSeries::one(int arity, long L, const Rat& order) {
  QSeries s = zero(arity, L, Rat(0), order);
  if (s.norder_ > 0) s.c_[0] = Laurent::constant(arity, Rat(1));
  return s;
}

Laurent QSeries::coeff(const Rat& e) const {
  Rat idx = (e - offset_) * L_;
  if (!is_integer(idx)) return Laurent(arity_);
  Int n = rat_floor(idx);
  if (n < 0 || n >= norder_)
    throw std::out_of_range("QSeries::coeff: exponent outside truncation range");
  auto it = c_.find(to_long(n));
  return it == c_.end() ? Laurent(arity_) : it->second;
}

void QSeries::add_at(const Rat& e, const Laurent& t) {
  if (t.is_zero()) return;
  Rat idx = (e - offset_) * L_;
  if (!is_integer(idx)) throw std::invalid_argument("QSeries::add_at: exponent off grid");
  Int n = rat_floor(idx);
  if (n < 0) throw std::invalid_argument("QSeries::add_at: exponent below offset");
  if (n >= norder_) return;
  long k = to_long(n);
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, t);
  } else {
    it->second += t;
    if (it->second.is_zero()) c_.erase(it);
  }
}

// Rewrites both series on a common offset (the minimum) and a common grid
// denominator, and clips both to the common valid order.
void align(QSeries& a, QSeries& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("QSeries: arity mismatch");
  long L = lcm_long(a.L_, b.L_);
  Rat diff = a.offset_ - b.offset_;
  L = lcm_long(L, to_long(Int(diff.get_den())));
  Rat off = a.offset_ < b.offset_ ? a.offset_ : b.offset_;
  Rat order = a.order() < b.order() ? a.order() : b.order();
  auto rebase = [&](QSeries& s) {
    QSeries r = QSeries::zero(s.arity_, L, off, order);
    for (const auto& [n, t] : s.c_) {
      Rat e = s.offset_ + rat(n, s.L_);
      if (e < order) r.add_at(e, t);
    }
    s = std::move(r);
  };
  rebase(a);
  rebase(b);
}

QSeries& QSeries::operator+=(const QSeries& o) {
  QSeries b = o;
  align(*this, b);
  for (const auto& [n, t] : b.c_) {
    auto it = c_.find(n);
    if (it == c_.end()) {
      c_.emplace(n, t);
    } else {
      it->second += t;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& [n, t] : r.c_) t = -t;
  return r;
}

QSeries& QSeries::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
  } else {
    for (auto& [n, t] : c_) t *= s;
  }
  return *this;
}

QSeries operator*(const QSeries& a0, const QSeries& b0) {
  QSeries a = a0, b = b0;
  if (a.arity_ != b.arity_) throw std::invalid_argument("QSeries: arity mismatch");
  long L = lcm_long(a.L_, b.L_);
  L = lcm_long(L, to_long(Int(Rat(a.offset_ + b.offset_).get_den())));
  a = a.regrid(L);
  b = b.regrid(L);
  QSeries r;
  r.arity_ = a.arity_;
  r.L_ = L;
  r.offset_ = a.offset_ + b.offset_;
  r.norder_ = std::min(a.norder_, b.norder_);
  for (const auto& [na, ta] : a.c_) {
    if (na >= r.norder_) break;
    for (const auto& [nb, tb] : b.c_) {
      long n = na + nb;
      if (n >= r.norder_) break;
      Laurent prod = ta * tb;
      if (prod.is_zero()) continue;
      auto it = r.c_.find(n);
      if (it == r.c_.end()) {
        r.c_.emplace(n, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  }
  return r;
}

QSeries QSeries::mul_term(const Rat& s, const Rat& t, const ExpVec& m) const {
  QSeries r;
  r.arity_ = arity_;
  r.L_ = lcm_long(L_, to_long(Int(Rat(offset_ + t).get_den())));
  r.offset_ = offset_ + t;
  r.norder_ = norder_ * (r.L_ / L_);
  if (s == 0) return r;
  long scale = r.L_ / L_;
  for (const auto& [n, tt] : c_) {
    Laurent v = tt.mul_monomial(m, s);
    if (!v.is_zero()) r.c_.emplace(n * scale, std::move(v));
  }
  return r;
}

void QSeries::mul_factor(const Rat& s, const Rat& t, const ExpVec& m) {
  if (t < 0) throw std::invalid_argument("mul_factor: negative q-shift");
  Rat tl = t * L_;
  if (!is_integer(tl)) {
    *this = regrid(lcm_long(L_, to_long(Int(t.get_den()))));
    tl = t * L_;
  }
  long dt = to_long(rat_floor(tl));
  // (1 + s q^dt e^m): add shifted copy, iterating downward so the update is
  // in place even when dt == 0 is not allowed... dt==0 handled as polynomial.
  std::map<long, Laurent> add;
  for (const auto& [n, v] : c_) {
    if (n + dt >= norder_) continue;
    auto [it, fresh] = add.emplace(n + dt, arity_);
    it->second += v.mul_monomial(m, s);
  }
  for (auto& [n, v] : add) {
    auto it = c_.find(n);
    if (it == c_.end()) {
      if (!v.is_zero()) c_.emplace(n, std::move(v));
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }
}

void QSeries::div_factor(const Rat& s, const Rat& t, const ExpVec& m) {
  if (t < 0) throw std::invalid_argument("div_factor: negative q-shift");
  if (t == 0) {
    if (expvec_is_zero(m)) {
      Rat d = Rat(1) + s;
      if (d == 0) throw std::invalid_argument("div_factor: dividing by zero");
      for (auto& [n, v] : c_) v *= Rat(1) / d;
      return;
    }
    std::map<long, Laurent> out;
    for (const auto& [n, v] : c_) {
      Laurent q = v.divide_exact_binomial(m, s);
      if (!q.is_zero()) out.emplace(n, std::move(q));
    }
    c_ = std::move(out);
    return;
  }
  Rat tl = t * L_;
  if (!is_integer(tl)) {
    *this = regrid(lcm_long(L_, to_long(Int(t.get_den()))));
    tl = t * L_;
  }
  long dt = to_long(rat_floor(tl));
  // Solve (1 + s q^dt e^m) * Q = P ascending in n: q_n = p_n - s e^m q_{n-dt}.
  std::map<long, Laurent> q;
  for (long n = 0; n < norder_; ++n) {
    Laurent p(arity_);
    if (auto it = c_.find(n); it != c_.end()) p = it->second;
    if (n >= dt) {
      if (auto it = q.find(n - dt); it != q.end()) p -= it->second.mul_monomial(m, s);
    }
    if (!p.is_zero()) q.emplace(n, std::move(p));
  }
  c_ = std::move(q);
}

QSeries QSeries::inverse() const {
  if (c_.empty()) throw std::invalid_argument("QSeries::inverse: zero series");
  auto lead = c_.begin();
  const Laurent& l = lead->second;
  if (!l.is_single_term())
    throw std::invalid_argument("QSeries::inverse: leading coefficient is not a unit");
  long n0 = lead->first;
  ExpVec e0 = l.terms().begin()->first;
  Rat c0 = l.terms().begin()->second;
  Rat inv_c0 = Rat(1) / c0;
  ExpVec neg_e0 = expvec_neg(e0);

  // Normalize: A = (this shifted so its lowest term is 1).  Then solve
  // B * A = 1 ascending in the q-index.
  QSeries r;
  r.arity_ = arity_;
  r.L_ = L_;
  r.offset_ = -(offset_ + rat(n0, L_));
  r.norder_ = norder_ - n0;
  // a_j: coefficient at relative index j of the normalized series.
  auto a_at = [&](long j) -> Laurent {
    auto it = c_.find(n0 + j);
    if (it == c_.end()) return Laurent(arity_);
    return it->second.mul_monomial(neg_e0, inv_c0);
  };
  std::map<long, Laurent> b;
  b[0] = Laurent::constant(arity_, Rat(1));
  for (long n = 1; n < r.norder_; ++n) {
    Laurent acc(arity_);
    for (const auto& [j, bj] : b) {
      if (j >= n) break;
      Laurent aj = a_at(n - j);
      if (!aj.is_zero()) acc += aj * bj;
    }
    if (!acc.is_zero()) b[n] = -acc;
  }
  for (const auto& [n, v] : b) {
    Laurent w = v.mul_monomial(neg_e0, inv_c0);
    if (!w.is_zero()) r.c_.emplace(n, std::move(w));
  }
  return r;
}

QSeries QSeries::truncated(const Rat& new_order) const {
  Rat idx = (new_order - offset_) * L_;
  if (!is_integer(idx)) throw std::invalid_argument("truncated: order off grid");
  Int n = rat_floor(idx);
  QSeries r = *this;
  long nn = n < 0 ? 0 : to_long(n);
  if (nn < r.norder_) {
    r.norder_ = nn;
    r.c_.erase(r.c_.lower_bound(nn), r.c_.end());
  }
  return r;
}

QSeries QSeries::shift_var(int i, const Rat& t) const {
  long L = lcm_long(L_, to_long(Int(t.get_den())));
  QSeries r = zero(arity_, L, offset_, order());
  for (const auto& [n, v] : c_) {
    Rat e = offset_ + rat(n, L_);
    for (const auto& [m, coef] : v.terms()) {
      Rat e2 = e + t * m[i];
      if (e2 < r.offset_ || e2 >= r.order()) continue;
      r.add_at(e2, Laurent::monomial(arity_, m, coef));
    }
  }
  return r;
}

QSeries QSeries::invert_vars() const {
  QSeries r = *this;
  for (auto& [n, v] : r.c_) v = v.invert_vars();
  return r;
}

QSeries QSeries::window(long w) const {
  QSeries r = *this;
  std::map<long, Laurent> out;
  for (const auto& [n, v] : r.c_) {
    Laurent t = v.window(w);
    if (!t.is_zero()) out.emplace(n, std::move(t));
  }
  r.c_ = std::move(out);
  return r;
}

QSeries QSeries::regrid(long new_L) const {
  if (new_L == L_) return *this;
  if (new_L % L_ != 0) throw std::invalid_argument("regrid: incompatible grid");
  long k = new_L / L_;
  QSeries r;
  r.arity_ = arity_;
  r.L_ = new_L;
  r.offset_ = offset_;
  r.norder_ = norder_ * k;
  for (const auto& [n, v] : c_) r.c_.emplace(n * k, v);
  return r;
}

bool QSeries::equal_on_common_range(const QSeries& o) const {
  QSeries a = *this, b = o;
  // Extend offsets downward to the minimum so low-end terms are compared too.
  align(a, b);
  return a.c_ == b.c_;
}

std::string QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["offset"] = rat_str(offset_);
  j["denom_lcm"] = L_;
  j["order"] = rat_str(order());
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [n, v] : c_) {
    Rat e = offset_ + rat(n, L_);
    nlohmann::ordered_json term;
    term["q_num"] = e.get_num().get_str();
    term["q_den"] = e.get_den().get_str();
    nlohmann::ordered_json monos = nlohmann::ordered_json::array();
    for (const auto& [m, coef] : v.terms()) {
      nlohmann::ordered_json mo;
      mo["exps"] = m;
      mo["num"] = coef.get_num().get_str();
      mo["den"] = coef.get_den().get_str();
      monos.push_back(std::move(mo));
    }
    term["monomials"] = std::move(monos);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string QSeries::str(const std::vector<std::string>& vars) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, v] : c_) {
    Rat e = offset_ + rat(n, L_);
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str(vars) << ")";
    if (e != 0) os << "*q^" << (is_integer(e) ? rat_str(e) : "(" + rat_str(e) + ")");
  }
  if (first) os << "0";
  os << " + O(q^" << rat_str(order()) << ")";
  return os.str();
}

QSeries expand_inverse_factor(int arity, long L, const Rat& s, const Rat& t,
                              const ExpVec& m, const Rat& order) {
  if (s == 0) return QSeries::one(arity, L, order);
  if (t != 0) {
    long LL = lcm_long(L, to_long(Int(t.get_den())));
    if (t > 0) {
      QSeries r = QSeries::zero(arity, LL, Rat(0), order);
      Rat e(0);
      Rat coef(1);
      ExpVec em(arity, 0);
      long j = 0;
      while (e < order) {
        r.add_at(e, Laurent::monomial(arity, em, coef));
        ++j;
        e += t;
        coef *= -s;
        em = expvec_add(em, m);
      }
      return r;
    }
    // t < 0: 1/(1 + s q^t e^m) = (1/s) q^{-t} e^{-m} * 1/(1 + (1/s) q^{-t} e^{-m})
    QSeries inner = expand_inverse_factor(arity, L, Rat(1) / s, -t, expvec_neg(m), order);
    return inner.mul_term(Rat(1) / s, -t, expvec_neg(m)).truncated(order);
  }
  if (expvec_is_zero(m)) {
    QSeries r = QSeries::one(arity, L, order);
    Rat d = Rat(1) + s;
    if (d == 0) throw std::invalid_argument("expand_inverse_factor: pole");
    r *= Rat(1) / d;
    return r;
  }
  // t == 0 with a genuine monomial: the whole expansion sits at q^0.  Expand
  // in the direction in which the monomial is lexicographically negative
  // ("small" for the lattice order); the caller bounds the number of terms.
  bool lex_neg = false;
  for (long e : m) {
    if (e != 0) {
      lex_neg = e < 0;
      break;
    }
  }
  const long kTerms = 64;  // fixed window in the monomial direction
  QSeries r = QSeries::zero(arity, L, Rat(0), order);
  if (lex_neg) {
    Laurent acc(arity);
    Rat coef(1);
    ExpVec em(arity, 0);
    for (long j = 0; j < kTerms; ++j) {
      acc.add_term(em, coef);
      coef *= -s;
      em = expvec_add(em, m);
    }
    r.add_at(Rat(0), acc);
  } else {
    // Factor out the monomial first, then expand in its inverse.
    Laurent acc(arity);
    Rat coef = Rat(1) / s;
    ExpVec em = expvec_neg(m);
    for (long j = 0; j < kTerms; ++j) {
      acc.add_term(em, coef);
      coef *= Rat(-1) / s;
      em = expvec_add(em, expvec_neg(m));
    }
    r.add_at(Rat(0), acc);
  }
  return r;
}

}  // namespace wmin
