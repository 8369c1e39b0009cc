#include "wmin/weights.hpp"

#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace wmin {

Rat aform(const AlgebraData& d, const AffineWeight& a, const AffineWeight& b) {
  return d.form(a.fin, b.fin) + a.a0 * b.dcoef + a.dcoef * b.a0;
}

Rat pairing_x(const AlgebraData& d, const AffineWeight& lam) {
  return d.form(lam.fin, wscale(rat(1, 2), d.theta));
}

Rat pairing_xD(const AlgebraData& d, const AffineWeight& lam) {
  return pairing_x(d, lam) + lam.dcoef;
}

EvWeight ev(const AlgebraData& d, const AffineWeight& lam) {
  return {-pairing_xD(d, lam), d.restrict_hnat(lam.fin)};
}

// ---------------------------------------------------------------------------
// Weyl group
// ---------------------------------------------------------------------------

Weight reflect_simple(const AlgebraData& d, int i, const Weight& w) {
  const Weight& a = d.simple_nat[i];
  Rat c = d.pair_covee(w, a);
  return wsub(w, wscale(c, a));
}

Weight weyl_act(const AlgebraData& d, const std::vector<int>& word, const Weight& w) {
  Weight r = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect_simple(d, *it, r);
  return r;
}

Weight apply_action(const std::vector<Weight>& action, const Weight& w) {
  Weight r = wzero(static_cast<int>(action.size()));
  for (std::size_t i = 0; i < action.size(); ++i)
    if (w[i] != 0) r = wadd(r, wscale(w[i], action[i]));
  return r;
}

AffineWeight weyl_act_affine(const AlgebraData& d, const std::vector<Weight>& action,
                             const AffineWeight& lam) {
  (void)d;
  return {lam.a0, lam.dcoef, apply_action(action, lam.fin)};
}

namespace {

std::vector<Weight> identity_action(int dim) {
  std::vector<Weight> a;
  for (int i = 0; i < dim; ++i) {
    Weight w = wzero(dim);
    w[i] = 1;
    a.push_back(w);
  }
  return a;
}

std::vector<WeylElt> enumerate_weyl(const AlgebraData& d) {
  std::vector<WeylElt> out;
  std::map<std::vector<Weight>, bool> seen;
  WeylElt id{{}, 1, identity_action(d.dim)};
  out.push_back(id);
  seen[id.action] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    WeylElt cur = out[head];  // copy: out may reallocate
    for (int i = 0; i < static_cast<int>(d.simple_nat.size()); ++i) {
      std::vector<Weight> next(d.dim);
      for (int c = 0; c < d.dim; ++c) next[c] = reflect_simple(d, i, cur.action[c]);
      if (seen.emplace(next, true).second) {
        WeylElt e;
        e.word = cur.word;
        e.word.insert(e.word.begin(), i);  // s_i acting after cur ... i.e. s_i * cur
        e.det = -cur.det;
        e.action = std::move(next);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<WeylElt>& weyl_group(const AlgebraData& d) {
  static std::mutex mu;
  static std::map<std::string, std::vector<WeylElt>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d.name);
  if (it == cache.end()) it = cache.emplace(d.name, enumerate_weyl(d)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    Rat inv = 1 / M[col][col];
    for (std::size_t j = col; j < n; ++j) M[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::vector<Weight> fundamental_weights(const AlgebraData& d) {
  const std::size_t n = d.simple_nat.size();
  // Express omega in the basis of simple roots: omega_i = sum_j c_j alpha_j with
  // pair_covee(omega_i, alpha_k) = delta_ik.
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      M[k][j] = d.pair_covee(d.simple_nat[j], d.simple_nat[k]);
  std::vector<Weight> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> rhs(n, Rat(0));
    rhs[i] = 1;
    std::vector<Rat> c = solve_linear(M, rhs);
    Weight w = wzero(d.dim);
    for (std::size_t j = 0; j < n; ++j) w = wadd(w, wscale(c[j], d.simple_nat[j]));
    out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Translations
// ---------------------------------------------------------------------------

std::vector<Int> mnat_coords(const AlgebraData& d, const Weight& alpha) {
  const std::size_t n = d.mnat_basis.size();
  // Solve with the Gram matrix of the basis (negative definite, nonsingular).
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  std::vector<Rat> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = d.form(d.mnat_basis[i], d.mnat_basis[j]);
    rhs[i] = d.form(d.mnat_basis[i], alpha);
  }
  std::vector<Rat> c = solve_linear(M, rhs);
  Weight recon = wzero(d.dim);
  std::vector<Int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer(c[i])) throw std::runtime_error("mnat_coords: not in the lattice");
    out.push_back(c[i].get_num());
    recon = wadd(recon, wscale(c[i], d.mnat_basis[i]));
  }
  if (recon != alpha) throw std::runtime_error("mnat_coords: not in the lattice span");
  return out;
}

namespace {

AffineWeight translate_one(const AlgebraData& d, const Weight& alpha, const Rat& v,
                           const AffineWeight& lam) {
  Rat lk = lam.a0;  // level
  Rat two_v = 2 / v;
  AffineWeight r = lam;
  r.fin = wadd(r.fin, wscale(two_v * lk, alpha));
  r.dcoef -= two_v * (d.form(lam.fin, alpha) + d.form(alpha, alpha) * lk / v);
  return r;
}

}  // namespace

AffineWeight translate(const AlgebraData& d, const Weight& alpha, const AffineWeight& lam) {
  mnat_coords(d, alpha);  // membership check
  if (d.ideals.size() == 1) return translate_one(d, alpha, d.ideals[0].u, lam);
  // Decompose into ideal components (each ideal here is rank 1, spanned by theta_i).
  AffineWeight r = lam;
  Weight rest = alpha;
  for (const auto& id : d.ideals) {
    Rat c = d.form(alpha, id.theta_i) / id.u;
    Weight comp = wscale(c, id.theta_i);
    rest = wsub(rest, comp);
    if (!wis_zero(comp)) r = translate_one(d, comp, id.u, r);
  }
  if (!wis_zero(rest))
    throw std::runtime_error("translate: alpha not in the span of the ideals");
  return r;
}

// ---------------------------------------------------------------------------
// Lattice enumeration
// ---------------------------------------------------------------------------

namespace {

Rat minor_det(const std::vector<std::vector<Rat>>& A, std::size_t n) {
  // determinant of the leading n x n block, by fraction-free elimination
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rat f = M[r][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
    }
  }
  return det;
}

}  // namespace

std::vector<Weight> enumerate_lattice_leq(const std::vector<Weight>& basis,
                                          const std::function<Rat(const Weight&)>& Q,
                                          const Rat& bound) {
  const std::size_t n = basis.size();
  if (n == 0) throw std::invalid_argument("enumerate_lattice_leq: empty basis");
  const int dim = static_cast<int>(basis[0].size());
  auto point = [&](const std::vector<long>& x) {
    Weight w = wzero(dim);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0) w = wadd(w, wscale(Rat(x[i]), basis[i]));
    return w;
  };
  auto Qx = [&](const std::vector<long>& x) { return Q(point(x)); };

  // Extract Q(x) = x^T A x + b.x + c by finite differences.
  std::vector<long> z(n, 0);
  Rat c = Qx(z);
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = z, m = z;
    p[i] = 1;
    m[i] = -1;
    Rat qp = Qx(p), qm = Qx(m);
    A[i][i] = (qp + qm - 2 * c) / 2;
    b[i] = (qp - qm) / 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto p = z;
      p[i] = 1;
      p[j] = 1;
      Rat qij = Qx(p);
      A[i][j] = A[j][i] = (qij + c - (A[i][i] + b[i] + c) - (A[j][j] + b[j] + c)) / 2;
    }
  // Verify the quadratic model on sample points.
  auto model = [&](const std::vector<long>& x) {
    Rat s = c;
    for (std::size_t i = 0; i < n; ++i) {
      s += b[i] * x[i];
      for (std::size_t j = 0; j < n; ++j) s += A[i][j] * Rat(x[i]) * Rat(x[j]);
    }
    return s;
  };
  std::mt19937 rng(20240915);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<long> x(n);
    for (auto& v : x) v = dist(rng);
    if (model(x) != Qx(x))
      throw std::runtime_error("enumerate_lattice_leq: Q is not quadratic on the lattice");
  }
  // Positive definiteness via leading principal minors.
  for (std::size_t i = 1; i <= n; ++i)
    if (minor_det(A, i) <= 0)
      throw std::runtime_error("enumerate_lattice_leq: quadratic part not positive definite");

  // Complete the square: Q(x) = (x+mu)^T A (x+mu) + c - mu^T A mu with mu = A^{-1} b / 2.
  std::vector<Rat> mu = solve_linear(A, b);
  for (auto& m : mu) m /= 2;
  Rat shift = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) shift -= mu[i] * A[i][j] * mu[j];
  Rat R = bound - shift;  // need (x+mu)^T A (x+mu) <= R
  std::vector<Weight> out;
  if (R < 0) return out;

  // Ellipsoid box: |x_i + mu_i| <= sqrt(R * (A^{-1})_ii).
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    Rat ainv_ii = solve_linear(A, e)[i];
    Int s = isqrt_ceil(R * ainv_ii);
    lo[i] = rat_floor(-mu[i] - Rat(s)).get_si();
    hi[i] = rat_ceil(-mu[i] + Rat(s)).get_si();
  }
  std::vector<long> x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (Qx(x) <= bound) out.push_back(point(x));
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace wmin
