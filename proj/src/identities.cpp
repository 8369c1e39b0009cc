#include "wmin/identities.hpp"

#include "wmin/catalog.hpp"
#include "wmin/deligne.hpp"
#include "wmin/wchar.hpp"
#include "wmin/weights.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wmin {

namespace {

using Json = nlohmann::json;

// ============================================================================
// Building blocks
// ============================================================================

QSeries make_theta0(const Rat& s, const Rat& order) {
  QSeries out = QSeries::one(1, 2, order);
  for (long j = 1; rat(j - 1) < order; ++j) {
    out.mul_factor(-s, rat(j - 1), {1});
    if (rat(j) < order) out.mul_factor(-1 / s, rat(j), {-1});
  }
  return out;
}

}  // namespace

QSeries theta0(const Rat& order) { return make_theta0(Rat(1), order); }

QSeries theta1(const Rat& order) {
  // theta0(-x q^{1/2}) = prod (1 + x q^{j-1/2})(1 + x^{-1} q^{j-1/2}).
  QSeries out = QSeries::one(1, 2, order);
  for (long j = 1; rat(2 * j - 1, 2) < order; ++j) {
    out.mul_factor(Rat(1), rat(2 * j - 1, 2), {1});
    out.mul_factor(Rat(1), rat(2 * j - 1, 2), {-1});
  }
  return out;
}

QSeries phi(const Rat& order) {
  QSeries out = QSeries::one(1, 2, order);
  for (long j = 1; rat(j) < order; ++j) out.mul_factor(Rat(-1), rat(j), {0});
  return out;
}

QSeries phi1(const Rat& order) {
  QSeries out = QSeries::one(1, 2, order);
  for (long j = 1; rat(2 * j - 1, 2) < order; ++j)
    out.mul_factor(Rat(1), rat(2 * j - 1, 2), {0});
  return out;
}

QSeries phi2(const Rat& order) {
  QSeries out = QSeries::one(1, 2, order);
  for (long j = 1; rat(j) < order; ++j) out.mul_factor(Rat(1), rat(j), {0});
  return out;
}

namespace {

// ============================================================================
// Shared sum/product machinery
// ============================================================================

// A sparse factor (1 + c q^t e^m).  In `num` it multiplies the left side, in
// `den` it divides it; per-term `inv` factors divide a single summand.
struct Factor {
  Rat c;
  Rat t;
  ExpVec m;
};

// One summand of the lattice sum: coef * q^qexp * e^mono / prod inv.
struct Term {
  Rat coef;
  Rat qexp;
  ExpVec mono;
  std::vector<Factor> inv;
};

struct SumSpec {
  int arity = 1;
  std::vector<Factor> num;      // left side, numerator factors (t >= 0)
  std::vector<Factor> den;      // left side, denominator factors (t >= 0)
  std::vector<Factor> rhs_num;  // global factors multiplying the whole sum
  std::vector<Term> terms;
  std::optional<long> window;   // exponent window for degenerate lattice sums
};

using Multiset = std::map<ExpVec, long>;

// q^0 binomials (1 + e^m) occurring in the denominators of either side; both
// sides are multiplied by the full multiset ("cleared form").
Multiset clearing_set(const SumSpec& sp) {
  Multiset d;
  for (const Factor& f : sp.den)
    if (f.t == 0) {
      if (f.c != 1) throw std::logic_error("clearing_set: q^0 factor with c != 1");
      ++d[f.m];
    }
  for (const Term& t : sp.terms) {
    Multiset local;
    for (const Factor& f : t.inv)
      if (f.t == 0) {
        if (f.c != 1) throw std::logic_error("clearing_set: q^0 factor with c != 1");
        ++local[f.m];
      }
    for (const auto& [m, c] : local) d[m] = std::max(d[m], c);
  }
  return d;
}

QSeries assemble_lhs(const SumSpec& sp, const Rat& order) {
  QSeries s = QSeries::one(sp.arity, 2, order);
  for (const Factor& f : sp.num) {
    if (f.t < 0) throw std::logic_error("assemble_lhs: negative numerator shift");
    if (f.t < order) s.mul_factor(f.c, f.t, f.m);
  }
  Multiset lhs_q0;
  for (const Factor& f : sp.den) {
    if (f.t == 0) {
      ++lhs_q0[f.m];
    } else {
      if (f.t < 0) throw std::logic_error("assemble_lhs: negative denominator shift");
      if (f.t < order) s.div_factor(f.c, f.t, f.m);
    }
  }
  for (const auto& [m, c] : clearing_set(sp)) {
    long have = 0;
    if (auto it = lhs_q0.find(m); it != lhs_q0.end()) have = it->second;
    for (long r = have; r < c; ++r) s.mul_factor(Rat(1), Rat(0), m);
  }
  if (sp.window) s = s.window(*sp.window);
  return s;
}

QSeries assemble_rhs(const SumSpec& sp, const Rat& order) {
  const Multiset cleared = clearing_set(sp);
  // Lowest possible exponent across kept terms.
  Rat off(0);
  std::vector<Rat> drifts;
  drifts.reserve(sp.terms.size());
  for (const Term& t : sp.terms) {
    Rat drift(0);
    for (const Factor& f : t.inv)
      if (f.t < 0) drift -= f.t;
    drifts.push_back(drift);
    Rat minexp = t.qexp + drift;
    if (minexp < order && minexp < off) off = minexp;
  }
  QSeries acc = QSeries::zero(sp.arity, 2, off, order);
  for (std::size_t i = 0; i < sp.terms.size(); ++i) {
    const Term& t = sp.terms[i];
    const Rat& drift = drifts[i];
    if (t.qexp + drift >= order) continue;
    QSeries ts = QSeries::zero(sp.arity, 2, t.qexp, order);
    ts.add_at(t.qexp, Laurent::monomial(sp.arity, t.mono, t.coef));
    Multiset used;
    for (const Factor& f : t.inv) {
      if (f.t == 0) {
        if (f.c != 1) throw std::logic_error("assemble_rhs: q^0 factor with c != 1");
        ++used[f.m];
      } else if (f.t > 0) {
        ts.div_factor(f.c, f.t, f.m);
      } else {
        ts *= expand_inverse_factor(sp.arity, 2, f.c, f.t, f.m, order - t.qexp + drift);
      }
    }
    for (const auto& [m, c] : cleared) {
      long have = 0;
      if (auto it = used.find(m); it != used.end()) have = it->second;
      for (long r = have; r < c; ++r) ts.mul_factor(Rat(1), Rat(0), m);
    }
    for (const auto& [n, lp] : ts.raw())
      acc.add_at(ts.offset() + rat(n, ts.denom_lcm()), lp);
  }
  for (const Factor& f : sp.rhs_num) {
    if (f.t <= 0) throw std::logic_error("assemble_rhs: global factor with t <= 0");
    if (f.t < order) acc.mul_factor(f.c, f.t, f.m);
  }
  if (sp.window) acc = acc.window(*sp.window);
  return acc;
}

// ----------------------------------------------------------------------------
// factor-list helpers
// ----------------------------------------------------------------------------

ExpVec vneg(ExpVec m) {
  for (long& x : m) x = -x;
  return m;
}

// theta0(s e^m) = prod_{j>=1} (1 - s q^{j-1} e^m)(1 - s^{-1} q^j e^{-m}).
void theta0_factors(std::vector<Factor>& v, const Rat& s, const ExpVec& m,
                    const Rat& order) {
  for (long j = 1; rat(j - 1) < order; ++j) {
    v.push_back({-s, rat(j - 1), m});
    if (rat(j) < order) v.push_back({-1 / s, rat(j), vneg(m)});
  }
}

// theta1(e^m) = prod_{j>=1} (1 + q^{j-1/2} e^m)(1 + q^{j-1/2} e^{-m}).
void theta1_factors(std::vector<Factor>& v, const ExpVec& m, const Rat& order) {
  for (long j = 1; rat(2 * j - 1, 2) < order; ++j) {
    v.push_back({Rat(1), rat(2 * j - 1, 2), m});
    v.push_back({Rat(1), rat(2 * j - 1, 2), vneg(m)});
  }
}

void phi_factors(std::vector<Factor>& v, int count, int arity, const Rat& order) {
  ExpVec z(arity, 0);
  for (long j = 1; rat(j) < order; ++j)
    for (int r = 0; r < count; ++r) v.push_back({Rat(-1), rat(j), z});
}

void phi1_factors(std::vector<Factor>& v, int arity, const Rat& order) {
  ExpVec z(arity, 0);
  for (long j = 1; rat(2 * j - 1, 2) < order; ++j)
    v.push_back({Rat(1), rat(2 * j - 1, 2), z});
}

void phi2_factors(std::vector<Factor>& v, int arity, const Rat& order) {
  ExpVec z(arity, 0);
  for (long j = 1; rat(j) < order; ++j) v.push_back({Rat(1), rat(j), z});
}

// Smallest N >= 1 with a N^2 - b N - c >= order; terms beyond the radius
// cannot reach exponents below `order` (the per-term minimum-exponent check
// stays exact, the radius only has to be a safe overestimate).
long scan_radius(const Rat& a, const Rat& b, const Rat& c, const Rat& order) {
  long n = 1;
  while (a * n * n - b * n - c < order) ++n;
  return n + 2;
}

Rat sgn_pow(long n) { return n % 2 == 0 ? Rat(1) : Rat(-1); }

// ----------------------------------------------------------------------------
// signed-permutation and dihedral groups acting on exponent vectors
// ----------------------------------------------------------------------------

struct GroupElt {
  std::vector<std::vector<long>> mat;  // column j = image exponent of e_j
  Rat det;
  ExpVec apply(const ExpVec& a) const {
    ExpVec out(a.size(), 0);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0)
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += mat[i][j] * a[j];
    return out;
  }
};

// All signed permutations of r letters; even_only restricts to an even number
// of sign flips.
std::vector<GroupElt> signed_permutations(int r, bool even_only) {
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  std::vector<GroupElt> out;
  do {
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inv;
    for (long mask = 0; mask < (1L << r); ++mask) {
      int flips = __builtin_popcountl(mask);
      if (even_only && flips % 2 != 0) continue;
      GroupElt g;
      g.mat.assign(r, std::vector<long>(r, 0));
      for (int j = 0; j < r; ++j) g.mat[perm[j]][j] = (mask >> j) & 1 ? -1 : 1;
      g.det = sgn_pow(inv + flips);
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Dihedral group of order 12 generated by (a,b) -> (b-a, b) and the swap,
// acting on the exponent lattice of (y1, y2).
std::vector<GroupElt> dihedral12() {
  auto mul = [](const std::vector<std::vector<long>>& a,
                const std::vector<std::vector<long>>& b) {
    std::vector<std::vector<long>> c(2, std::vector<long>(2, 0));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<std::vector<long>> s1 = {{-1, 1}, {0, 1}}, s2 = {{0, 1}, {1, 0}};
  std::map<std::vector<std::vector<long>>, Rat> seen;
  std::vector<GroupElt> out;
  std::vector<std::pair<std::vector<std::vector<long>>, Rat>> frontier = {
      {{{1, 0}, {0, 1}}, Rat(1)}};
  seen[frontier[0].first] = Rat(1);
  while (!frontier.empty()) {
    auto [m, dt] = frontier.back();
    frontier.pop_back();
    out.push_back({m, dt});
    for (const auto& g : {s1, s2}) {
      auto nm = mul(g, m);
      if (!seen.count(nm)) {
        seen[nm] = -dt;
        frontier.push_back({nm, -dt});
      }
    }
  }
  if (out.size() != 12) throw std::logic_error("dihedral12: wrong order");
  return out;
}

ExpVec unit(int arity, int i, long v = 1) {
  ExpVec e(arity, 0);
  e[i] = v;
  return e;
}

// ============================================================================
// The individual identities
// ============================================================================

SumSpec spec_euler(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  phi_factors(sp.num, 1, 1, order);
  long N = scan_radius(rat(3, 2), rat(1, 2), Rat(0), order);
  for (long m = -N; m <= N; ++m)
    sp.terms.push_back({sgn_pow(m), rat(3 * m * m + m, 2), {0}, {}});
  return sp;
}

SumSpec spec_gauss_triangular(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  for (long n = 1; rat(2 * n - 1) < order; ++n) {
    if (rat(2 * n) < order) sp.num.push_back({Rat(-1), rat(2 * n), {0}});
    sp.den.push_back({Rat(-1), rat(2 * n - 1), {0}});
  }
  long N = scan_radius(rat(1, 2), rat(1, 2), Rat(0), order);
  for (long n = 0; n <= N; ++n)
    sp.terms.push_back({Rat(1), rat(n * (n + 1), 2), {0}, {}});
  return sp;
}

SumSpec spec_gauss_square(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  for (long n = 1; rat(n) < order; ++n) {
    sp.num.push_back({Rat(-1), rat(n), {0}});
    sp.den.push_back({Rat(1), rat(n), {0}});
  }
  long N = scan_radius(Rat(1), Rat(0), Rat(0), order);
  for (long n = -N; n <= N; ++n)
    sp.terms.push_back({sgn_pow(n), rat(n * n), {0}, {}});
  return sp;
}

SumSpec spec_n2_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  phi_factors(sp.num, 2, 1, order);
  // theta1(z^{-1}) = prod (1 + z^{-1} q^{j-1/2})(1 + z q^{j-1/2}).
  theta1_factors(sp.den, {-1}, order);
  long N = scan_radius(Rat(2), Rat(3), Rat(1), order);
  for (long n = -N; n <= N; ++n) {
    sp.terms.push_back(
        {Rat(1), rat(2 * n * n - n), {0}, {{Rat(1), rat(-4 * n + 1, 2), {-1}}}});
    sp.terms.push_back(
        {Rat(-1), rat(2 * n * n + n), {0}, {{Rat(1), rat(-4 * n - 1, 2), {-1}}}});
  }
  return sp;
}

SumSpec spec_n2_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  phi_factors(sp.num, 2, 1, order);
  // theta0(-z^{-1}) = prod (1 + z^{-1} q^{j-1})(1 + z q^j).
  for (long j = 1; rat(j - 1) < order; ++j) {
    sp.den.push_back({Rat(1), rat(j - 1), {-1}});
    if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), {1}});
  }
  long N = scan_radius(rat(1, 2), rat(3, 2), Rat(0), order);
  for (long r = -N; r <= N; ++r)
    sp.terms.push_back(
        {sgn_pow(r), rat(r * (r + 1), 2), {0}, {{Rat(1), rat(r), {-1}}}});
  return sp;
}

SumSpec spec_ramanujan(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  long W = to_long(rat_ceil(order));
  sp.window = W;
  phi_factors(sp.num, 2, 2, order);
  theta0_factors(sp.num, Rat(1), {1, 1}, order);
  // theta0(-x), theta0(-y).
  for (long j = 1; rat(j - 1) < order; ++j)
    for (int v = 0; v < 2; ++v) {
      sp.den.push_back({Rat(1), rat(j - 1), unit(2, v, 1)});
      if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), unit(2, v, -1)});
    }
  for (long m = 0; m <= W; ++m)
    for (long n = 0; n <= W && rat(m * n) < order; ++n)
      sp.terms.push_back({sgn_pow(m + n), rat(m * n), {m, n}, {}});
  for (long m = -1; m >= -W - 1; --m)
    for (long n = -1; n >= -W - 1 && rat(m * n) < order; --n)
      sp.terms.push_back({-sgn_pow(m + n), rat(m * n), {m, n}, {}});
  return sp;
}

SumSpec spec_psl22_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  phi_factors(sp.num, 2, 2, order);
  theta0_factors(sp.num, Rat(1), {-1, -1}, order);
  theta1_factors(sp.den, {1, 0}, order);
  theta1_factors(sp.den, {0, 1}, order);
  long N = scan_radius(Rat(1), Rat(3), Rat(2), order);
  for (long n = -N; n <= N; ++n) {
    Rat t = rat(2 * n + 1, 2);
    sp.terms.push_back({Rat(1),
                        rat(n * n + n),
                        {n, n},
                        {{Rat(1), t, {1, 0}}, {Rat(1), t, {0, 1}}}});
    sp.terms.push_back({Rat(-1),
                        rat(n * n + n),
                        {-n - 1, -n - 1},
                        {{Rat(1), t, {-1, 0}}, {Rat(1), t, {0, -1}}}});
  }
  return sp;
}

SumSpec spec_psl22_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  phi_factors(sp.num, 2, 2, order);
  theta0_factors(sp.num, Rat(1), {-1, -1}, order);
  // theta0(-x^{-1}) theta0(-y^{-1}).
  for (long j = 1; rat(j - 1) < order; ++j)
    for (int v = 0; v < 2; ++v) {
      sp.den.push_back({Rat(1), rat(j - 1), unit(2, v, -1)});
      if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), unit(2, v, 1)});
    }
  long N = scan_radius(Rat(1), Rat(2), Rat(0), order);
  for (long n = -N; n <= N; ++n) {
    sp.terms.push_back({Rat(1),
                        rat(n * n),
                        {n, n},
                        {{Rat(1), rat(-n), {-1, 0}}, {Rat(1), rat(-n), {0, -1}}}});
    sp.terms.push_back({Rat(-1),
                        rat(n * n),
                        {-n, -n},
                        {{Rat(1), rat(-n), {1, 0}}, {Rat(1), rat(-n), {0, 1}}}});
  }
  return sp;
}

SumSpec spec_spo23_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  phi_factors(sp.num, 2, 1, order);
  theta0_factors(sp.num, Rat(1), {1}, order);
  theta1_factors(sp.den, {1}, order);
  // The substitution chain that produces this identity yields the square of
  // the half-integer Euler factor on the sum side.
  phi1_factors(sp.rhs_num, 1, order);
  phi1_factors(sp.rhs_num, 1, order);
  long M = to_long(rat_ceil(2 * order)) + 1;
  for (long m = 0; m <= M; ++m)
    for (long n = 0; rat(2 * m * n + m + n, 2) < order; ++n)
      sp.terms.push_back({sgn_pow(m + n), rat(2 * m * n + m + n, 2), {-m}, {}});
  for (long m = -1; m >= -M; --m)
    for (long n = -1; rat(2 * m * n + m + n, 2) < order; --n)
      sp.terms.push_back({-sgn_pow(m + n), rat(2 * m * n + m + n, 2), {-m}, {}});
  return sp;
}

SumSpec spec_spo23_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 1;
  long W = to_long(rat_ceil(order));
  sp.window = W;
  phi_factors(sp.num, 2, 1, order);
  theta0_factors(sp.num, Rat(1), {1}, order);
  phi2_factors(sp.den, 1, order);
  for (long j = 1; rat(j - 1) < order; ++j) {
    sp.den.push_back({Rat(1), rat(j - 1), {1}});
    if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), {-1}});
  }
  phi2_factors(sp.rhs_num, 1, order);
  sp.terms.push_back({Rat(1), Rat(0), {0}, {}});
  for (long n = 1; n <= W; ++n)
    sp.terms.push_back({2 * sgn_pow(n), Rat(0), {n}, {}});
  for (long n = 1; n <= W; ++n)
    for (long m = 1; rat(m * n) < order; ++m)
      sp.terms.push_back({2 * sgn_pow(m + n), rat(m * n), {n}, {}});
  for (long n = -1; n >= -W - 1; --n)
    for (long m = -1; rat(m * n) < order; --m)
      sp.terms.push_back({-2 * sgn_pow(m + n), rat(m * n), {n}, {}});
  return sp;
}

SumSpec spec_d211_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  phi_factors(sp.num, 3, 2, order);
  theta0_factors(sp.num, Rat(1), {-2, 0}, order);
  theta0_factors(sp.num, Rat(1), {0, -2}, order);
  theta1_factors(sp.den, {1, 1}, order);
  theta1_factors(sp.den, {1, -1}, order);
  long N = scan_radius(Rat(1), Rat(2), Rat(3), order);
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      Rat q = rat(m * m + n * n + m + n);
      Rat t = rat(2 * (m + n) + 1, 2);
      sp.terms.push_back({Rat(1), q, {2 * m, 2 * n}, {{Rat(1), t, {1, 1}}}});
      sp.terms.push_back({Rat(-1), q, {-2 * m - 2, 2 * n}, {{Rat(1), t, {-1, 1}}}});
      sp.terms.push_back({Rat(-1), q, {2 * m, -2 * n - 2}, {{Rat(1), t, {1, -1}}}});
      sp.terms.push_back(
          {Rat(1), q, {-2 * m - 2, -2 * n - 2}, {{Rat(1), t, {-1, -1}}}});
    }
  return sp;
}

SumSpec spec_d211_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  phi_factors(sp.num, 3, 2, order);
  theta0_factors(sp.num, Rat(1), {-2, 0}, order);
  theta0_factors(sp.num, Rat(1), {0, -2}, order);
  // theta0(-x^{-1}y^{-1}) theta0(-x^{-1}y).
  for (const ExpVec& m : {ExpVec{-1, -1}, ExpVec{-1, 1}})
    for (long j = 1; rat(j - 1) < order; ++j) {
      sp.den.push_back({Rat(1), rat(j - 1), m});
      if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), vneg(m)});
    }
  long N = scan_radius(Rat(1), Rat(2), Rat(3), order);
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      Rat q = rat(m * m + n * n + n);
      Rat t = rat(m + n);
      sp.terms.push_back({Rat(1), q, {-2 * m, 2 * n}, {{Rat(1), t, {-1, 1}}}});
      sp.terms.push_back({Rat(-1), q, {2 * m, 2 * n}, {{Rat(1), t, {1, 1}}}});
      sp.terms.push_back({Rat(-1), q, {-2 * m, -2 * n - 2}, {{Rat(1), t, {-1, -1}}}});
      sp.terms.push_back({Rat(1), q, {2 * m, -2 * n - 2}, {{Rat(1), t, {1, -1}}}});
    }
  return sp;
}

// LHS of both spo(2|2r) identities (even m = 2r, r >= 3); exponent vectors are
// scaled by `scale` (2 for the Ramond side, whose display has half-integer
// exponents).
void spo_even_lhs(SumSpec& sp, long r, long scale, const Rat& order) {
  phi_factors(sp.num, static_cast<int>(r) + 1, static_cast<int>(r), order);
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      ExpVec a(r, 0), b(r, 0);
      a[i] = -scale, a[j] = scale;   // theta0(y_i^{-1} y_j)
      b[i] = -scale, b[j] = -scale;  // theta0(y_i^{-1} y_j^{-1})
      theta0_factors(sp.num, Rat(1), a, order);
      theta0_factors(sp.num, Rat(1), b, order);
    }
}

SumSpec spec_spo_even_ns(long r, const Rat& order) {
  if (r < 3) throw std::invalid_argument("spo_even identities need r >= 3");
  SumSpec sp;
  sp.arity = static_cast<int>(r);
  spo_even_lhs(sp, r, 1, order);
  for (long i = 0; i < r; ++i)
    theta1_factors(sp.den, unit(sp.arity, static_cast<int>(i)), order);
  Rat a = rat(2 * r - 3, 2);
  Rat cother = rat(r - 1) * (rat(r * r) / (4 * a) + 1) + 1;
  long N = scan_radius(a, rat(r), cother, order);
  std::vector<GroupElt> grp = signed_permutations(static_cast<int>(r), true);
  std::vector<long> m(r, -N);
  while (true) {
    long msum = 0;
    Rat q(0);
    ExpVec base(r);
    for (long i = 0; i < r; ++i) {
      msum += m[i];
      q += a * m[i] * m[i] + rat((r - i - 1) * m[i]);
      base[i] = (2 * r - 3) * m[i] + (r - i - 1);
    }
    // The translation lattice consists of the integer vectors with even
    // coordinate sum.
    if (msum % 2 == 0 && q - rat(std::abs(m[0])) - 1 < order)
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        for (long i = 0; i < r; ++i) mono[i] += i + 1 - r;
        sp.terms.push_back({w.det, q, mono,
                            {{Rat(1), rat(2 * m[0] + 1, 2),
                              w.apply(unit(sp.arity, 0))}}});
      }
    long i = r - 1;
    while (i >= 0 && m[i] == N) m[i--] = -N;
    if (i < 0) break;
    ++m[i];
  }
  return sp;
}

SumSpec spec_spo_even_ramond(long r, const Rat& order) {
  if (r < 3) throw std::invalid_argument("spo_even identities need r >= 3");
  SumSpec sp;
  sp.arity = static_cast<int>(r);
  spo_even_lhs(sp, r, 2, order);
  for (long i = 0; i < r; ++i) {
    // theta0(-y_i^{-1}).
    for (long j = 1; rat(j - 1) < order; ++j) {
      sp.den.push_back({Rat(1), rat(j - 1), unit(sp.arity, static_cast<int>(i), -2)});
      if (rat(j) < order)
        sp.den.push_back({Rat(1), rat(j), unit(sp.arity, static_cast<int>(i), 2)});
    }
  }
  Rat a = rat(2 * r - 3, 2);
  Rat cother = rat(r - 1) * (rat(r * r) / (4 * a) + 1) + 1;
  long N = scan_radius(a, rat(r), cother, order);
  std::vector<GroupElt> grp = signed_permutations(static_cast<int>(r), true);
  std::vector<long> m(r, -N);
  while (true) {
    Rat q(0);
    ExpVec base(r);
    for (long i = 0; i < r; ++i) {
      q += a * m[i] * m[i] + rat(2 * (r - i - 1) * m[i] - m[i], 2);
      base[i] = 2 * ((2 * r - 3) * m[i] + (r - i - 1)) - 1;
    }
    if (q - rat(std::abs(m[r - 1])) - 1 < order)
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        for (long i = 0; i < r; ++i) mono[i] += 1 + 2 * (i + 1 - r);
        sp.terms.push_back(
            {w.det / 2, q, mono,
             {{Rat(1), rat(-m[r - 1]),
               w.apply(unit(sp.arity, static_cast<int>(r) - 1, -2))}}});
      }
    long i = r - 1;
    while (i >= 0 && m[i] == N) m[i--] = -N;
    if (i < 0) break;
    ++m[i];
  }
  return sp;
}

void spo_odd_lhs(SumSpec& sp, long r, long scale, const Rat& order) {
  phi_factors(sp.num, static_cast<int>(r) + 1, static_cast<int>(r), order);
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) {
      ExpVec a(r, 0), b(r, 0);
      a[i] = -scale, a[j] = scale;
      b[i] = -scale, b[j] = -scale;
      theta0_factors(sp.num, Rat(1), a, order);
      theta0_factors(sp.num, Rat(1), b, order);
    }
  for (long i = 0; i < r; ++i)
    theta0_factors(sp.num, Rat(1), unit(static_cast<int>(r), static_cast<int>(i), -scale),
                   order);
}

SumSpec spec_spo_odd_ns(long r, const Rat& order) {
  if (r < 2) throw std::invalid_argument("spo_odd identities need r >= 2");
  SumSpec sp;
  sp.arity = static_cast<int>(r);
  spo_odd_lhs(sp, r, 2, order);
  phi1_factors(sp.den, sp.arity, order);
  for (long i = 0; i < r; ++i)
    theta1_factors(sp.den, unit(sp.arity, static_cast<int>(i), 2), order);
  Rat a = rat(r - 1);
  Rat cother = rat(r - 1) * (rat(r * r) / (4 * a) + 1) + 1;
  long N = scan_radius(a, rat(r), cother, order);
  std::vector<GroupElt> grp = signed_permutations(static_cast<int>(r), false);
  std::vector<long> m(r, -N);
  while (true) {
    long msum = 0;
    Rat q(0);
    ExpVec base(r);
    for (long i = 0; i < r; ++i) {
      msum += m[i];
      // The q-linear coefficient matches the additive constant of the
      // exponent of y_i, here r - i - 1/2 (0-based i).
      q += a * m[i] * m[i] + rat(2 * (r - i - 1) * m[i] + m[i], 2);
      base[i] = 4 * (r - 1) * m[i] + 2 * r - 1 - 2 * i;
    }
    // Even-coordinate-sum translation lattice, as in the even case.
    if (msum % 2 == 0 && q - rat(std::abs(m[0])) - 1 < order)
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        for (long i = 0; i < r; ++i) mono[i] += 2 * (i + 1) - 2 * r - 1;
        sp.terms.push_back({w.det, q, mono,
                            {{Rat(1), rat(2 * m[0] + 1, 2),
                              w.apply(unit(sp.arity, 0, 2))}}});
      }
    long i = r - 1;
    while (i >= 0 && m[i] == N) m[i--] = -N;
    if (i < 0) break;
    ++m[i];
  }
  return sp;
}

SumSpec spec_spo_odd_ramond(long r, const Rat& order) {
  if (r < 2) throw std::invalid_argument("spo_odd identities need r >= 2");
  SumSpec sp;
  sp.arity = static_cast<int>(r);
  spo_odd_lhs(sp, r, 1, order);
  phi2_factors(sp.den, sp.arity, order);
  for (long i = 0; i < r; ++i)
    for (long j = 1; rat(j - 1) < order; ++j) {
      sp.den.push_back({Rat(1), rat(j - 1), unit(sp.arity, static_cast<int>(i), -1)});
      if (rat(j) < order)
        sp.den.push_back({Rat(1), rat(j), unit(sp.arity, static_cast<int>(i), 1)});
    }
  Rat a = rat(r - 1);
  Rat cother = rat(r - 1) * (rat(r * r) / (4 * a) + 1) + 1;
  long N = scan_radius(a, rat(r), cother, order);
  std::vector<GroupElt> grp = signed_permutations(static_cast<int>(r), false);
  std::vector<long> m(r, -N);
  while (true) {
    long msum = 0;
    Rat q(0);
    ExpVec base(r);
    for (long i = 0; i < r; ++i) {
      msum += m[i];
      // As in the NS case the q-linear coefficient matches the additive
      // constant of the exponent of y_i, here r - i - 1 (0-based i).
      q += a * m[i] * m[i] + rat((r - i - 1) * m[i]);
      base[i] = 2 * (r - 1) * m[i] + (r - i - 1);
    }
    // Even-coordinate-sum translation lattice, as in the even case.
    if (msum % 2 == 0 && q - rat(std::abs(m[r - 1])) - 1 < order)
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        for (long i = 0; i < r; ++i) mono[i] += i + 1 - r;
        sp.terms.push_back(
            {w.det, q, mono,
             {{Rat(1), rat(-m[r - 1]),
               w.apply(unit(sp.arity, static_cast<int>(r) - 1, -1))}}});
      }
    long i = r - 1;
    while (i >= 0 && m[i] == N) m[i--] = -N;
    if (i < 0) break;
    ++m[i];
  }
  return sp;
}

SumSpec spec_f4_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 3;
  phi_factors(sp.num, 4, 3, order);
  for (int i = 0; i < 3; ++i) theta0_factors(sp.num, Rat(1), unit(3, i, -2), order);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      ExpVec a(3, 0), b(3, 0);
      a[i] = -2, a[j] = -2;
      b[i] = -2, b[j] = 2;
      theta0_factors(sp.num, Rat(1), a, order);
      theta0_factors(sp.num, Rat(1), b, order);
    }
  for (const ExpVec& v :
       {ExpVec{1, 1, 1}, ExpVec{1, 1, -1}, ExpVec{1, -1, 1}, ExpVec{-1, 1, 1}})
    theta1_factors(sp.den, v, order);
  long N = scan_radius(Rat(2), Rat(3), Rat(6), order);
  std::vector<GroupElt> grp = signed_permutations(3, false);
  for (long m = -N; m <= N; ++m)
    for (long r = -N; r <= N; ++r)
      for (long t = -N; t <= N; ++t) {
        if ((m + r + t) % 2 != 0) continue;
        Rat q = rat(2 * (m * m + r * r + t * t)) + rat(5 * m + 3 * r + t, 2);
        ExpVec base = {8 * m + 5, 8 * r + 3, 8 * t + 1};
        for (const GroupElt& w : grp) {
          ExpVec mono = w.apply(base);
          mono[0] -= 5, mono[1] -= 3, mono[2] -= 1;
          sp.terms.push_back({w.det, q, mono,
                              {{Rat(1), rat(m + r + t + 1, 2),
                                w.apply({1, 1, 1})}}});
        }
      }
  return sp;
}

SumSpec spec_f4_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 3;
  phi_factors(sp.num, 4, 3, order);
  for (int i = 0; i < 3; ++i) theta0_factors(sp.num, Rat(1), unit(3, i, -2), order);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      ExpVec a(3, 0), b(3, 0);
      a[i] = -2, a[j] = -2;
      b[i] = -2, b[j] = 2;
      theta0_factors(sp.num, Rat(1), a, order);
      theta0_factors(sp.num, Rat(1), b, order);
    }
  for (const ExpVec& v : {ExpVec{-1, -1, -1}, ExpVec{-1, -1, 1}, ExpVec{-1, 1, -1},
                          ExpVec{1, -1, -1}})
    for (long j = 1; rat(j - 1) < order; ++j) {
      sp.den.push_back({Rat(1), rat(j - 1), v});
      if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), vneg(v)});
    }
  long N = scan_radius(Rat(2), Rat(3), Rat(6), order);
  std::vector<GroupElt> grp = signed_permutations(3, false);
  for (long m = -N; m <= N; ++m)
    for (long r = -N; r <= N; ++r)
      for (long t = -N; t <= N; ++t) {
        if ((m + r + t) % 2 != 0) continue;
        Rat q = rat(2 * (m * m + r * r + t * t) + 2 * m + r);
        ExpVec base = {8 * m + 4, 8 * r + 2, 8 * t};
        for (const GroupElt& w : grp) {
          ExpVec mono = w.apply(base);
          mono[0] -= 4, mono[1] -= 2;
          sp.terms.push_back({w.det, q, mono,
                              {{Rat(1), rat(m - r - t, 2), w.apply({1, -1, -1})}}});
        }
      }
  return sp;
}

void g3_lhs_num(SumSpec& sp, const Rat& order) {
  phi_factors(sp.num, 3, 2, order);
  for (const ExpVec& m : {ExpVec{-1, 0}, ExpVec{0, -1}, ExpVec{1, -1},
                          ExpVec{-1, -1}, ExpVec{-2, -1}, ExpVec{-1, -2}})
    theta0_factors(sp.num, Rat(1), m, order);
}

SumSpec spec_g3_ns(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  g3_lhs_num(sp, order);
  phi1_factors(sp.den, 2, order);
  for (const ExpVec& m : {ExpVec{1, 0}, ExpVec{0, 1}, ExpVec{1, 1}})
    theta1_factors(sp.den, m, order);
  long N = scan_radius(rat(1, 2), Rat(2), Rat(3), order);
  std::vector<GroupElt> grp = dihedral12();
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      if (((m + n) % 3 + 3) % 3 != 0) continue;
      Rat q = rat(m * m + n * n) + rat(m - 3 * m * n + 4 * n, 3);
      ExpVec base = {3 * m + 2, 3 * n + 3};
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        mono[0] -= 2, mono[1] -= 3;
        sp.terms.push_back({w.det, q, mono,
                            {{Rat(1), rat(m + n, 3) + rat(1, 2), w.apply({1, 1})}}});
      }
    }
  return sp;
}

SumSpec spec_g3_ramond(const Rat& order) {
  SumSpec sp;
  sp.arity = 2;
  g3_lhs_num(sp, order);
  phi2_factors(sp.den, 2, order);
  for (const ExpVec& m : {ExpVec{-1, 0}, ExpVec{0, -1}, ExpVec{-1, -1}})
    for (long j = 1; rat(j - 1) < order; ++j) {
      sp.den.push_back({Rat(1), rat(j - 1), m});
      if (rat(j) < order) sp.den.push_back({Rat(1), rat(j), vneg(m)});
    }
  long N = scan_radius(rat(1, 2), Rat(2), Rat(3), order);
  std::vector<GroupElt> grp = dihedral12();
  for (long m = -N; m <= N; ++m)
    for (long n = -N; n <= N; ++n) {
      if (((m + n) % 3 + 3) % 3 != 0) continue;
      // The q-linear term pairs the translation with the additive constant
      // (1, 2) of the monomial exponents, giving n rather than m.
      Rat q = rat(m * m + n * n + n - m * n);
      ExpVec base = {3 * m + 1, 3 * n + 2};
      for (const GroupElt& w : grp) {
        ExpVec mono = w.apply(base);
        mono[0] -= 1, mono[1] -= 2;
        sp.terms.push_back(
            {w.det, q, mono, {{Rat(1), rat(n - 2 * m, 3), w.apply({-1, 0})}}});
      }
    }
  return sp;
}

// ============================================================================
// Generic two-sided denominator identities (coroot variables, level k0)
// ============================================================================

struct Sides {
  QSeries lhs, rhs;
};

void require_k0(const AlgebraData& d, const char* who) {
  if (!d.has_k0)
    throw std::invalid_argument(std::string(who) + ": " + d.name +
                                " has no collapse level; the identity does not "
                                "apply");
}

// Multiplies `s` by the bosonic denominator product and divides it by the
// fermionic factors with positive q-shift; q^0 fermionic binomials are
// returned as a multiset (they join the clearing set), and the scalar zero
// mode when theta/2 is a root is skipped on both sides.
Multiset lhs_denominator(const AlgebraData& d, const Encoder& enc, QSeries& s,
                         bool ramond, std::size_t choice) {
  const ExpVec zero(enc.arity, 0);
  Multiset q0;
  for (long n = 1; rat(n - 1) < s.rel_order(); ++n) {
    Rat t1 = rat(n - 1), t2 = rat(n);
    for (const Weight& al : d.delta_nat_plus) {
      s.mul_factor(Rat(-1), t1, enc.map(wscale(Rat(-1), al)));
      if (t2 < s.rel_order()) s.mul_factor(Rat(-1), t2, enc.map(al));
    }
    if (t2 < s.rel_order())
      for (int r = 0; r < d.dim_h; ++r) s.mul_factor(Rat(-1), t2, zero);
    if (ramond) {
      for (const Weight& eta : d.delta_half_pos_options[choice]) {
        if (n == 1)
          ++q0[enc.map(wscale(Rat(-1), eta))];
        else
          s.div_factor(Rat(1), t1, enc.map(wscale(Rat(-1), eta)));
        if (t2 < s.rel_order()) s.div_factor(Rat(1), t2, enc.map(eta));
      }
      if (d.eps_R == 1 && n > 1) s.div_factor(Rat(1), t1, zero);
    } else {
      Rat th = rat(2 * n - 1, 2);
      if (th < s.rel_order()) {
        for (const Weight& mu : d.delta_half_bar) s.div_factor(Rat(1), th, enc.map(mu));
        if (d.eps_R == 1) s.div_factor(Rat(1), th, zero);
      }
    }
  }
  return q0;
}

Sides build_generic(const IdentityId& id, const Rat& order) {
  AlgebraData d = lookup(id.algebra);
  require_k0(d, "generic identity");
  const bool ramond = id.kind == IdentityKind::generic_detR;
  std::size_t choice = ramond ? id.choice : 0;
  if (choice >= d.rho_R_options.size())
    throw std::invalid_argument("generic_detR: eta choice out of range");
  Rat k = d.k0;
  Rat h = k + d.h_dual;
  Encoder enc = coroot_encoder(d);
  Weight nu = wzero(d.dim);

  AffineWeight lam, rho_like;
  std::vector<AffineWeight> pi1;
  Rat pref;
  if (ramond) {
    TwistData td = twist_data(d, choice);
    lam = nu_hat_s(d, k, nu, s0_of(d, k, nu, choice), choice);
    rho_like = td.rho_tw;
    pi1 = pi1bar_nu(d, k, nu, choice);
    pref = (aform(d, lam, lam) + 2 * aform(d, lam, rho_like)) / (2 * h) + a_of_k(d, k);
  } else {
    lam = nu_hat_t_ns(d, k, nu, t0_options(d, k, nu)[0]);
    rho_like = rho_hat_ns(d);
    pi1 = pi1bar_ns(d);
    pref = (aform(d, lam, lam) + 2 * aform(d, lam, rho_like)) / (2 * h);
  }
  if (is_degenerate(d, lam))
    throw std::invalid_argument("generic identity: degenerate anchor weight");
  Rat lead = pref + ev(d, lam).qexp;
  WeylSum ws = weyl_translation_sum(d, enc, lam, rho_like, pi1, pref, order - lead);
  QSeries rhs = std::move(ws.series);
  if (ramond)
    rhs = rhs.mul_term(Rat(1), Rat(0),
                       enc.map(wscale(Rat(-1), d.rho_R_options[choice])));

  long L = rhs.denom_lcm();
  QSeries lhs = QSeries::one(enc.arity, L, rhs.order());
  Multiset lhs_q0 = lhs_denominator(d, enc, lhs, ramond, choice);

  Multiset D = lhs_q0;
  Multiset ws_q0;
  for (const auto& [m, c] : ws.q0_cleared) {
    ws_q0[m] += c;
    D[m] = std::max(D[m], ws_q0[m]);
  }
  for (const auto& [m, c] : D) {
    long have = 0;
    if (auto it = lhs_q0.find(m); it != lhs_q0.end()) have = it->second;
    for (long r = have; r < c; ++r) lhs.mul_factor(Rat(1), Rat(0), m);
    have = 0;
    if (auto it = ws_q0.find(m); it != ws_q0.end()) have = it->second;
    for (long r = have; r < c; ++r) rhs.mul_factor(Rat(1), Rat(0), m);
  }
  return {std::move(lhs), std::move(rhs)};
}

// ============================================================================
// Dispatch, comparison, reporting
// ============================================================================

SumSpec make_spec(const IdentityId& id, const Rat& order) {
  switch (id.kind) {
    case IdentityKind::euler_partition: return spec_euler(order);
    case IdentityKind::gauss_triangular: return spec_gauss_triangular(order);
    case IdentityKind::gauss_square: return spec_gauss_square(order);
    case IdentityKind::n2_ns: return spec_n2_ns(order);
    case IdentityKind::n2_ramond: return spec_n2_ramond(order);
    case IdentityKind::ramanujan: return spec_ramanujan(order);
    case IdentityKind::psl22_ns: return spec_psl22_ns(order);
    case IdentityKind::psl22_ramond: return spec_psl22_ramond(order);
    case IdentityKind::spo23_ns: return spec_spo23_ns(order);
    case IdentityKind::spo23_ramond: return spec_spo23_ramond(order);
    case IdentityKind::d211_ns: return spec_d211_ns(order);
    case IdentityKind::d211_ramond: return spec_d211_ramond(order);
    case IdentityKind::spo_even_ns: return spec_spo_even_ns(id.r, order);
    case IdentityKind::spo_even_ramond: return spec_spo_even_ramond(id.r, order);
    case IdentityKind::spo_odd_ns: return spec_spo_odd_ns(id.r, order);
    case IdentityKind::spo_odd_ramond: return spec_spo_odd_ramond(id.r, order);
    case IdentityKind::f4_ns: return spec_f4_ns(order);
    case IdentityKind::f4_ramond: return spec_f4_ramond(order);
    case IdentityKind::g3_ns: return spec_g3_ns(order);
    case IdentityKind::g3_ramond: return spec_g3_ramond(order);
    default:
      throw std::logic_error("make_spec: not a lattice-sum identity");
  }
}

Sides build_sides(const IdentityId& id, const Rat& order, bool allow_big) {
  if (id.kind == IdentityKind::generic_detNS || id.kind == IdentityKind::generic_detR)
    return build_generic(id, order);
  if (id.kind == IdentityKind::deligne) {
    if (id.deligne_type == "E8")
      throw std::invalid_argument(
          "deligne:E8 is out of reach at this scale: its natural Weyl group is "
          "W(E7) with 2903040 elements");
    if (id.deligne_type == "E7" && !allow_big)
      throw std::invalid_argument(
          "deligne:E7 enumerates 23040 natural Weyl group elements; rerun with "
          "allow_big to unlock it");
    DeligneData dd = deligne_data(id.deligne_type);
    return {deligne_lhs(dd, order), deligne_rhs(dd, order)};
  }
  SumSpec sp = make_spec(id, order);
  return {assemble_lhs(sp, order), assemble_rhs(sp, order)};
}

long count_terms(const QSeries& s) {
  long n = 0;
  for (const auto& [e, lp] : s.raw()) n += static_cast<long>(lp.terms().size());
  return n;
}

std::optional<Mismatch> first_diff(const QSeries& a, const QSeries& b) {
  if (a.arity() != b.arity()) throw std::logic_error("first_diff: arity mismatch");
  QSeries x = a, y = b;
  long L = lcm_long(x.denom_lcm(), y.denom_lcm());
  x = x.regrid(L);
  y = y.regrid(L);
  Rat stop = std::min(x.order(), y.order());
  std::set<Rat> levels;
  for (const auto& [n, lp] : x.raw()) levels.insert(x.offset() + rat(n, L));
  for (const auto& [n, lp] : y.raw()) levels.insert(y.offset() + rat(n, L));
  for (const Rat& e : levels) {
    if (e >= stop) break;
    Laurent cx = (e >= x.offset() && e < x.order()) ? x.coeff(e)
                                                    : Laurent(x.arity());
    Laurent cy = (e >= y.offset() && e < y.order()) ? y.coeff(e)
                                                    : Laurent(y.arity());
    std::set<ExpVec> monos;
    for (const auto& [m, c] : cx.terms()) monos.insert(m);
    for (const auto& [m, c] : cy.terms()) monos.insert(m);
    for (const ExpVec& m : monos) {
      Rat vx = cx.coeff(m), vy = cy.coeff(m);
      if (vx != vy) return Mismatch{e, m, vx, vy};
    }
  }
  return std::nullopt;
}

std::string kind_str(IdentityKind k) {
  switch (k) {
    case IdentityKind::euler_partition: return "euler_partition";
    case IdentityKind::gauss_triangular: return "gauss_triangular";
    case IdentityKind::gauss_square: return "gauss_square";
    case IdentityKind::n2_ns: return "n2_ns";
    case IdentityKind::n2_ramond: return "n2_ramond";
    case IdentityKind::ramanujan: return "ramanujan";
    case IdentityKind::psl22_ns: return "psl22_ns";
    case IdentityKind::psl22_ramond: return "psl22_ramond";
    case IdentityKind::spo23_ns: return "spo23_ns";
    case IdentityKind::spo23_ramond: return "spo23_ramond";
    case IdentityKind::d211_ns: return "d211_ns";
    case IdentityKind::d211_ramond: return "d211_ramond";
    case IdentityKind::spo_even_ns: return "spo_even_ns";
    case IdentityKind::spo_even_ramond: return "spo_even_ramond";
    case IdentityKind::spo_odd_ns: return "spo_odd_ns";
    case IdentityKind::spo_odd_ramond: return "spo_odd_ramond";
    case IdentityKind::f4_ns: return "f4_ns";
    case IdentityKind::f4_ramond: return "f4_ramond";
    case IdentityKind::g3_ns: return "g3_ns";
    case IdentityKind::g3_ramond: return "g3_ramond";
    case IdentityKind::generic_detNS: return "generic_detNS";
    case IdentityKind::generic_detR: return "generic_detR";
    case IdentityKind::deligne: return "deligne";
  }
  throw std::logic_error("kind_str: unknown kind");
}

}  // namespace

std::string IdentityId::name() const {
  std::string s = kind_str(kind);
  switch (kind) {
    case IdentityKind::spo_even_ns:
    case IdentityKind::spo_even_ramond:
    case IdentityKind::spo_odd_ns:
    case IdentityKind::spo_odd_ramond:
      return s + ":" + std::to_string(r);
    case IdentityKind::generic_detNS:
      return s + ":" + algebra;
    case IdentityKind::generic_detR:
      return s + ":" + algebra + ":" + std::to_string(choice);
    case IdentityKind::deligne:
      return s + ":" + deligne_type;
    default:
      return s;
  }
}

IdentityId parse_identity(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = s.find(':', pos);
    if (c == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, c - pos));
    pos = c + 1;
  }
  static const std::vector<IdentityKind> all = {
      IdentityKind::euler_partition, IdentityKind::gauss_triangular,
      IdentityKind::gauss_square,    IdentityKind::n2_ns,
      IdentityKind::n2_ramond,       IdentityKind::ramanujan,
      IdentityKind::psl22_ns,        IdentityKind::psl22_ramond,
      IdentityKind::spo23_ns,        IdentityKind::spo23_ramond,
      IdentityKind::d211_ns,         IdentityKind::d211_ramond,
      IdentityKind::spo_even_ns,     IdentityKind::spo_even_ramond,
      IdentityKind::spo_odd_ns,      IdentityKind::spo_odd_ramond,
      IdentityKind::f4_ns,           IdentityKind::f4_ramond,
      IdentityKind::g3_ns,           IdentityKind::g3_ramond,
      IdentityKind::generic_detNS,   IdentityKind::generic_detR,
      IdentityKind::deligne};
  IdentityId id;
  bool found = false;
  for (IdentityKind k : all)
    if (kind_str(k) == parts[0]) {
      id.kind = k;
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("unknown identity: " + s);
  auto need = [&](std::size_t n) {
    if (parts.size() != n)
      throw std::invalid_argument("malformed identity id: " + s);
  };
  switch (id.kind) {
    case IdentityKind::spo_even_ns:
    case IdentityKind::spo_even_ramond:
    case IdentityKind::spo_odd_ns:
    case IdentityKind::spo_odd_ramond:
      need(2);
      id.r = std::stol(parts[1]);
      break;
    case IdentityKind::generic_detNS:
      need(2);
      id.algebra = parts[1];
      break;
    case IdentityKind::generic_detR:
      need(3);
      id.algebra = parts[1];
      id.choice = static_cast<std::size_t>(std::stol(parts[2]));
      break;
    case IdentityKind::deligne:
      need(2);
      id.deligne_type = parts[1];
      if (id.deligne_type != "D4" && id.deligne_type != "E6" &&
          id.deligne_type != "E7" && id.deligne_type != "E8")
        throw std::invalid_argument("unknown Deligne type: " + parts[1]);
      break;
    default:
      need(1);
      break;
  }
  return id;
}

std::vector<std::string> identity_list() {
  std::vector<std::string> out = {
      "euler_partition", "gauss_triangular", "gauss_square",
      "n2_ns",           "n2_ramond",        "ramanujan",
      "psl22_ns",        "psl22_ramond",     "spo23_ns",
      "spo23_ramond",    "d211_ns",          "d211_ramond",
      "spo_even_ns:3",   "spo_even_ramond:3","spo_even_ns:4",
      "spo_even_ramond:4","spo_odd_ns:2",    "spo_odd_ramond:2",
      "spo_odd_ns:3",    "spo_odd_ramond:3", "f4_ns",
      "f4_ramond",       "g3_ns",            "g3_ramond"};
  for (const char* alg : {"psl(2|2)", "spo(2|4)", "spo(2|5)", "spo(2|6)",
                          "spo(2|7)", "F(4)", "G(3)"}) {
    out.push_back(std::string("generic_detNS:") + alg);
    std::size_t nch = lookup(alg).rho_R_options.size();
    for (std::size_t c = 0; c < nch; ++c)
      out.push_back(std::string("generic_detR:") + alg + ":" + std::to_string(c));
  }
  for (const char* t : {"D4", "E6", "E7", "E8"})
    out.push_back(std::string("deligne:") + t);
  return out;
}

QSeries build_lhs(const IdentityId& id, const Rat& order) {
  return build_sides(id, order, true).lhs;
}

QSeries build_rhs(const IdentityId& id, const Rat& order) {
  return build_sides(id, order, true).rhs;
}

std::string VerifyReport::to_json() const {
  Json j;
  j["id"] = id;
  j["order"] = rat_str(order);
  j["lhs_terms"] = lhs_terms;
  j["rhs_terms"] = rhs_terms;
  j["equal"] = equal;
  if (first_mismatch) {
    Json m;
    m["qexp"] = rat_str(first_mismatch->qexp);
    m["monomial"] = first_mismatch->monomial;
    m["lhs"] = rat_str(first_mismatch->lhs);
    m["rhs"] = rat_str(first_mismatch->rhs);
    j["first_mismatch"] = m;
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["wall_time_s"] = wall_time_s;
  return j.dump();
}

VerifyReport verify(const IdentityId& id, const Rat& order, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Sides sd = build_sides(id, order, opt.allow_big);
  if (opt.perturb_rhs) {
    if (Rat(1) >= sd.rhs.offset() && Rat(1) < sd.rhs.order())
      sd.rhs.add_at(Rat(1), Laurent::constant(sd.rhs.arity(), Rat(1)));
    else
      throw std::invalid_argument("perturb_rhs needs order > 1");
  }
  VerifyReport rep;
  rep.id = id.name();
  rep.order = order;
  rep.lhs_terms = count_terms(sd.lhs);
  rep.rhs_terms = count_terms(sd.rhs);
  rep.first_mismatch = first_diff(sd.lhs, sd.rhs);
  rep.equal = !rep.first_mismatch.has_value();
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wmin
