#include "wmin/deligne.hpp"

#include "wmin/weights.hpp"  // enumerate_lattice_leq

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace wmin {

namespace {

using Mat = std::vector<std::vector<Rat>>;

Rat dot(const Weight& a, const Weight& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Mat identity_mat(int n) {
  Mat m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

// Reflection in a norm-2 root: I - beta beta^T.
Mat reflection_mat(const Weight& beta) {
  int n = static_cast<int>(beta.size());
  Mat m = identity_mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] -= beta[i] * beta[j];
  return m;
}

Weight mat_apply(const Mat& m, const Weight& v) {
  Weight out(v.size(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

Mat matmul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Weight s_root(const Weight& beta, const Weight& v) {
  // Reflection of v in the norm-2 root beta.
  Weight out = v;
  Rat p = dot(beta, v);
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= p * beta[i];
  return out;
}

std::vector<Weight> e8_simples() {
  std::vector<Weight> s;
  Weight a1(8, rat(-1, 2));
  a1[0] = rat(1, 2);
  a1[7] = rat(1, 2);
  s.push_back(a1);
  Weight a2(8, Rat(0));
  a2[0] = Rat(1);
  a2[1] = Rat(1);
  s.push_back(a2);
  for (int i = 0; i < 6; ++i) {
    Weight a(8, Rat(0));
    a[i] = Rat(-1);
    a[i + 1] = Rat(1);
    s.push_back(a);
  }
  return s;  // a1, a2, a3 = e2-e1, a4 = e3-e2, ..., a8 = e7-e6
}

}  // namespace

DeligneData deligne_data(const std::string& type) {
  DeligneData d;
  d.type = type;
  if (type == "D4") {
    d.dim = 4;
    d.h_dual = 6;
    for (int i = 0; i < 3; ++i) {
      Weight a(4, Rat(0));
      a[i] = Rat(1);
      a[i + 1] = Rat(-1);
      d.simple_roots.push_back(a);
    }
    Weight a(4, Rat(0));
    a[2] = Rat(1);
    a[3] = Rat(1);
    d.simple_roots.push_back(a);
  } else if (type == "E6" || type == "E7" || type == "E8") {
    d.dim = 8;
    std::vector<Weight> s = e8_simples();
    int rank = type == "E6" ? 6 : type == "E7" ? 7 : 8;
    d.h_dual = type == "E6" ? 12 : type == "E7" ? 18 : 30;
    d.simple_roots.assign(s.begin(), s.begin() + rank);
  } else {
    throw std::invalid_argument("deligne_data: unknown type " + type);
  }
  d.rank = static_cast<int>(d.simple_roots.size());
  d.a = d.h_dual / 6 + 1;
  d.b = d.h_dual - d.a;

  // Reflection closure; each root carries its coordinates over the simple
  // basis, so positivity is sign-uniformity of the coordinates.
  std::map<Weight, std::vector<long>> roots;
  std::vector<Weight> frontier;
  for (int i = 0; i < d.rank; ++i) {
    std::vector<long> c(d.rank, 0);
    c[i] = 1;
    roots[d.simple_roots[i]] = c;
    std::vector<long> cm(d.rank, 0);
    cm[i] = -1;
    roots[wscale(Rat(-1), d.simple_roots[i])] = cm;
    frontier.push_back(d.simple_roots[i]);
    frontier.push_back(wscale(Rat(-1), d.simple_roots[i]));
  }
  while (!frontier.empty()) {
    Weight v = frontier.back();
    frontier.pop_back();
    std::vector<long> cv = roots.at(v);
    for (int i = 0; i < d.rank; ++i) {
      Rat p = dot(d.simple_roots[i], v);
      if (!is_integer(p)) throw std::logic_error("deligne_data: non-integral pairing");
      Weight nv = s_root(d.simple_roots[i], v);
      if (!roots.count(nv)) {
        std::vector<long> nc = cv;
        nc[i] -= to_long(p.get_num());
        roots[nv] = nc;
        frontier.push_back(nv);
      }
    }
  }
  d.rho = wzero(d.dim);
  for (const auto& [v, c] : roots) {
    bool pos = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
    if (pos) {
      d.delta_plus.push_back(v);
      d.rho = wadd(d.rho, wscale(rat(1, 2), v));
    }
  }
  const std::size_t npos[4] = {12, 36, 63, 120};
  int idx = type == "D4" ? 0 : type == "E6" ? 1 : type == "E7" ? 2 : 3;
  if (d.delta_plus.size() != npos[idx])
    throw std::logic_error("deligne_data: wrong number of positive roots");

  // Highest root: the dominant one.
  for (const Weight& v : d.delta_plus) {
    bool dom = true;
    for (const Weight& s : d.simple_roots)
      if (dot(v, s) < 0) dom = false;
    if (dom) d.theta = v;
  }
  if (d.theta.empty() || dot(d.theta, d.theta) != 2 ||
      dot(d.rho, d.theta) != rat(d.h_dual - 1))
    throw std::logic_error("deligne_data: highest-root invariants failed");

  // alpha = theta - alpha_{i_1} - ... - alpha_{i_{a-1}} by the unique greedy
  // descent through simple roots.
  d.alpha = d.theta;
  for (long step = 0; step < d.a - 1; ++step) {
    int found = -1;
    for (int i = 0; i < d.rank; ++i) {
      Weight c = wsub(d.alpha, d.simple_roots[i]);
      if (roots.count(c)) {
        if (found >= 0) throw std::logic_error("deligne_data: descent not unique");
        found = i;
      }
    }
    if (found < 0) throw std::logic_error("deligne_data: descent failed");
    d.alpha = wsub(d.alpha, d.simple_roots[found]);
  }
  if (dot(d.rho, d.alpha) != rat(d.h_dual - d.a))
    throw std::logic_error("deligne_data: (rho|alpha) != h_dual - a");

  for (const Weight& v : d.delta_plus) {
    Rat p = dot(v, d.theta);
    if (p == 0) d.nat_plus.push_back(v);
  }
  for (const auto& [v, c] : roots)
    if (dot(v, d.theta) == 1) d.half_plus.push_back(v);
  const std::size_t nnat[4] = {3, 15, 30, 63};
  if (d.nat_plus.size() != nnat[idx])
    throw std::logic_error("deligne_data: wrong natural subsystem");

  // Indecomposable elements of nat_plus.
  std::map<Weight, bool> natset;
  for (const Weight& v : d.nat_plus) natset[v] = true;
  for (const Weight& v : d.nat_plus) {
    bool simple = true;
    for (const Weight& u : d.nat_plus) {
      Weight wv = wsub(v, u);
      if (natset.count(wv)) {
        simple = false;
        break;
      }
    }
    if (simple) d.nat_simple.push_back(v);
  }
  return d;
}

namespace {

ExpVec enc(const DeligneData& d, const Weight& mu) {
  ExpVec out(d.nat_simple.size());
  for (std::size_t i = 0; i < d.nat_simple.size(); ++i) {
    Rat p = dot(mu, d.nat_simple[i]);
    if (!is_integer(p)) throw std::logic_error("deligne enc: non-integral pairing");
    out[i] = to_long(p.get_num());
  }
  return out;
}

}  // namespace

QSeries deligne_lhs(const DeligneData& d, const Rat& order) {
  int arity = static_cast<int>(d.nat_simple.size());
  QSeries s = QSeries::one(arity, 2, order);
  const ExpVec zero(arity, 0);
  for (long n = 1; rat(n - 1) < order; ++n) {
    if (rat(n) < order)
      for (int r = 0; r < d.rank; ++r) s.mul_factor(Rat(-1), rat(n), zero);
    for (const Weight& al : d.nat_plus) {
      s.mul_factor(Rat(-1), rat(n - 1), enc(d, wscale(Rat(-1), al)));
      if (rat(n) < order) s.mul_factor(Rat(-1), rat(n), enc(d, al));
    }
    Rat th = rat(2 * n - 1, 2);
    if (th < order)
      for (const Weight& be : d.half_plus) s.mul_factor(Rat(-1), th, enc(d, be));
  }
  return s;
}

QSeries deligne_rhs(const DeligneData& d, const Rat& order, bool plus_one) {
  const int arity = static_cast<int>(d.nat_simple.size());

  // Coset representatives: one w with w(eta) = theta per positive root eta,
  // found from a breadth-first search tree rooted at theta.
  std::map<Weight, std::pair<Weight, int>> parent;  // root -> (previous, simple index)
  std::queue<Weight> bfs;
  parent[d.theta] = {d.theta, -1};
  bfs.push(d.theta);
  while (!bfs.empty()) {
    Weight v = bfs.front();
    bfs.pop();
    for (int i = 0; i < d.rank; ++i) {
      Weight nv = s_root(d.simple_roots[i], v);
      if (nv != v && !parent.count(nv)) {
        parent[nv] = {v, i};
        bfs.push(nv);
      }
    }
  }

  // The natural Weyl group as matrices.
  std::vector<std::pair<Mat, Rat>> wnat;
  {
    std::map<Mat, Rat> seen;
    std::vector<Mat> gens;
    for (const Weight& b : d.nat_simple) gens.push_back(reflection_mat(b));
    Mat id = identity_mat(d.dim);
    seen[id] = Rat(1);
    std::vector<Mat> frontier = {id};
    while (!frontier.empty()) {
      Mat m = frontier.back();
      frontier.pop_back();
      Rat dt = seen.at(m);
      wnat.emplace_back(m, dt);
      for (const Mat& g : gens) {
        Mat nm = matmul(g, m);
        if (!seen.count(nm)) {
          seen[nm] = -dt;
          frontier.push_back(nm);
        }
      }
    }
  }

  struct Piece {
    Weight wbar_bg_rho;  // wbar(b gamma + rho)
    Rat coef;            // det(wbar) * ((gamma|alpha) [+1])
    Rat q1, q2;          // branch exponents base -+ c/2
  };
  std::vector<Piece> pieces;
  Rat off(0);
  for (const Weight& eta : d.delta_plus) {
    // Reconstruct wbar with wbar(eta) = theta from the tree path.
    Mat wbar = identity_mat(d.dim);
    Rat det(1);
    Weight cur = eta;
    while (cur != d.theta) {
      auto [prev, i] = parent.at(cur);
      wbar = matmul(reflection_mat(d.simple_roots[i]), wbar);
      det = -det;
      cur = prev;
    }
    Rat ell = dot(wsub(d.rho, mat_apply(wbar, d.rho)), d.theta);

    // gamma-enumeration: both branch exponents are positive-definite
    // inhomogeneous quadratics in gamma.
    std::map<Weight, bool> gammas;
    for (int sg : {-1, 1}) {
      auto E = [&](const Weight& g) -> Rat {
        Rat base = dot(d.rho, g) +
                   (rat(d.b) * dot(g, g) + rat(d.h_dual - 1)) / 2;
        Rat c = rat(d.b) * dot(g, eta) - ell + rat(d.h_dual - 1);
        return base + Rat(sg) * c / 2;
      };
      for (const Weight& g : enumerate_lattice_leq(d.simple_roots, E, order))
        gammas[g] = true;
    }
    for (const auto& [g, keep] : gammas) {
      Rat coef = dot(g, d.alpha);
      if (plus_one) coef += 1;
      if (coef == 0) continue;
      Rat base = dot(d.rho, g) + (rat(d.b) * dot(g, g) + rat(d.h_dual - 1)) / 2;
      Rat c = rat(d.b) * dot(g, eta) - ell + rat(d.h_dual - 1);
      Piece p;
      Weight bg = wadd(wscale(rat(d.b), g), d.rho);
      p.wbar_bg_rho = mat_apply(wbar, bg);
      p.coef = det * coef / 2;
      p.q1 = base - c / 2;
      p.q2 = base + c / 2;
      if (std::min(p.q1, p.q2) >= order || p.q1 == p.q2) continue;
      off = std::min({off, p.q1, p.q2});
      pieces.push_back(std::move(p));
    }
  }

  QSeries acc = QSeries::zero(arity, 2, off, order);
  ExpVec enc_rho = enc(d, d.rho);
  for (const Piece& p : pieces) {
    for (const auto& [m, dt] : wnat) {
      ExpVec e = enc(d, mat_apply(m, p.wbar_bg_rho));
      for (std::size_t i = 0; i < e.size(); ++i) e[i] -= enc_rho[i];
      Laurent t = Laurent::monomial(arity, e, p.coef * dt);
      // The two branches come from the cosets of wbar and s_theta wbar, whose
      // determinants differ by -1: (q^{-c/2} - q^{c/2}).  At c = 0 the
      // branches cancel (such pieces are skipped above).
      if (p.q1 < order) acc.add_at(p.q1, t);
      if (p.q2 < order) acc.add_at(p.q2, -t);
    }
  }
  return acc;
}

}  // namespace wmin
