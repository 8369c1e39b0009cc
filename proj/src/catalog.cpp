#include "wmin/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wmin {

namespace {

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw std::runtime_error("catalog(" + ctx + "): " + msg);
}

void require(bool ok, const std::string& ctx, const std::string& msg) {
  if (!ok) fail(ctx, msg);
}

Weight unit(int dim, int i, const Rat& c = Rat(1)) {
  Weight w(dim, Rat(0));
  w[i] = c;
  return w;
}

}  // namespace

Weight wadd(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight wsub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight wscale(const Rat& c, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool wis_zero(const Weight& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Weight wzero(int dim) { return Weight(dim, Rat(0)); }

Rat AlgebraData::form(const Weight& a, const Weight& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument(name + ": weight has wrong number of coordinates");
  Rat s(0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      s += a[i] * gram[i][j] * b[j];
    }
  }
  return s;
}

Rat AlgebraData::pair_covee(const Weight& nu, const Weight& alpha) const {
  Rat nn = form(alpha, alpha);
  if (nn == 0) fail(name, "pair_covee with isotropic root");
  return 2 * form(nu, alpha) / nn;
}

Weight AlgebraData::restrict_hnat(const Weight& w) const {
  Weight r = wzero(dim);
  for (int i : hnat_coords) r[i] = w[i];
  return r;
}

// ---------------------------------------------------------------------------
// Per-family constructors
// ---------------------------------------------------------------------------

namespace {

AlgebraData make_psl22() {
  AlgebraData d;
  d.name = "psl(2|2)";
  d.family = Family::Psl22;
  d.coord_names = {"d1", "d2", "e1", "e2"};
  d.dim = 4;
  d.hnat_coords = {0, 1};
  d.gram.assign(4, std::vector<Rat>(4, Rat(0)));
  d.gram[0][0] = d.gram[1][1] = Rat(-1);
  d.gram[2][2] = d.gram[3][3] = Rat(1);
  d.theta = {Rat(0), Rat(0), Rat(1), Rat(-1)};  // e1 - e2
  d.h_dual = Rat(0);

  Weight th1 = {Rat(1), Rat(-1), Rat(0), Rat(0)};  // d1 - d2
  d.ideals.push_back({th1, Rat(-2), Rat(-1), Rat(-1), -1, Rat(-2)});

  d.delta_nat_plus = {th1};
  d.simple_nat = {th1};
  d.delta_half_bar = {unit(4, 0), wscale(Rat(-1), unit(4, 0)), unit(4, 1),
                      wscale(Rat(-1), unit(4, 1))};
  d.xi = {rat(1, 2), rat(-1, 2), Rat(0), Rat(0)};
  d.eps_R = 0;
  d.dim_g_half = 4;
  d.dim_h = 2;

  d.eta_min_options = {unit(4, 0)};  // restricts to xi modulo (d1 + d2)
  d.delta_half_pos_options = {{unit(4, 0), wscale(Rat(-1), unit(4, 1))}};
  d.rho_R_options = {d.xi};
  d.rho_nat = d.xi;

  d.has_k0 = true;
  d.k0 = Rat(-1);
  d.k_crit = Rat(0);
  d.u_norm = Rat(-2);
  d.b_const = Rat(1);
  d.p1 = Rat(1);
  d.p0 = Rat(0);

  d.mnat_basis = {th1};
  d.ns_pi1bar = {wsub(unit(4, 2), unit(4, 0)), wsub(unit(4, 1), unit(4, 3))};
  return d;
}

AlgebraData make_spo(long m) {
  if (m <= 2) throw std::invalid_argument("spo(2|m) with m <= 2 is not in the catalog");
  AlgebraData d;
  {
    std::ostringstream os;
    os << "spo(2|" << m << ")";
    d.name = os.str();
  }
  d.family = Family::Spo2m;
  d.spo_m = m;
  const long r = m / 2;
  const bool odd = (m % 2 != 0);
  d.dim = static_cast<int>(r) + 1;
  d.coord_names = {"d1"};
  for (long i = 1; i <= r; ++i) d.coord_names.push_back("e" + std::to_string(i));
  for (long i = 1; i <= r; ++i) d.hnat_coords.push_back(static_cast<int>(i));
  d.gram.assign(d.dim, std::vector<Rat>(d.dim, Rat(0)));
  d.gram[0][0] = rat(1, 2);
  for (int i = 1; i < d.dim; ++i) d.gram[i][i] = rat(-1, 2);
  d.theta = unit(d.dim, 0, Rat(2));  // 2 d1
  d.h_dual = Rat(2) - rat(m, 2);

  auto e = [&](long i, const Rat& c = Rat(1)) { return unit(d.dim, static_cast<int>(i), c); };

  if (m == 3) {
    d.ideals.push_back({e(1), rat(-1, 2), Rat(-4), Rat(-2), -2, rat(-1, 2)});
  } else if (m == 4) {
    d.ideals.push_back({wadd(e(1), e(2)), Rat(-1), Rat(-2), Rat(-1), -1, Rat(-1)});
    d.ideals.push_back({wsub(e(1), e(2)), Rat(-1), Rat(-2), Rat(-1), -1, Rat(-1)});
  } else {
    d.ideals.push_back({wadd(e(1), e(2)), Rat(1) - rat(m, 2), Rat(-2), Rat(-1), -1, Rat(-1)});
  }

  for (long i = 1; i <= r; ++i)
    for (long j = i + 1; j <= r; ++j) {
      d.delta_nat_plus.push_back(wsub(e(i), e(j)));
      d.delta_nat_plus.push_back(wadd(e(i), e(j)));
    }
  if (odd)
    for (long i = 1; i <= r; ++i) d.delta_nat_plus.push_back(e(i));
  for (long i = 1; i < r; ++i) d.simple_nat.push_back(wsub(e(i), e(i + 1)));
  if (odd)
    d.simple_nat.push_back(e(r));
  else
    d.simple_nat.push_back(r >= 2 ? wadd(e(r - 1), e(r)) : e(1));  // r=1 only for m=3 (odd)

  for (long i = 1; i <= r; ++i) {
    d.delta_half_bar.push_back(e(i));
    d.delta_half_bar.push_back(e(i, Rat(-1)));
  }
  d.xi = e(1);
  d.eps_R = odd ? 1 : 0;
  d.dim_g_half = static_cast<int>(m);
  d.dim_h = static_cast<int>(r) + 1;

  Weight half_sum = wzero(d.dim);
  for (long i = 1; i <= r; ++i) half_sum = wadd(half_sum, e(i, rat(1, 2)));
  if (odd) {
    d.eta_min_options = {e(r)};
    std::vector<Weight> pos;
    for (long i = 1; i <= r; ++i) pos.push_back(e(i));
    d.delta_half_pos_options = {pos};
    d.rho_R_options = {half_sum};
  } else {
    std::vector<Weight> pos1, pos2;
    for (long i = 1; i <= r; ++i) pos1.push_back(e(i));
    for (long i = 1; i < r; ++i) pos2.push_back(e(i));
    pos2.push_back(e(r, Rat(-1)));
    d.eta_min_options = {e(r), e(r, Rat(-1))};
    d.delta_half_pos_options = {pos1, pos2};
    d.rho_R_options = {half_sum, wsub(half_sum, e(r))};
  }
  d.rho_nat = wzero(d.dim);
  for (long i = 1; i <= r; ++i) {
    Rat c = odd ? Rat(r - i) + rat(1, 2) : Rat(r - i);
    d.rho_nat = wadd(d.rho_nat, e(i, c));
  }

  d.has_k0 = (m != 3);
  if (d.has_k0) d.k0 = rat(-1, 2);
  d.k_crit = -d.h_dual;
  d.u_norm = (m == 3) ? rat(-1, 2) : Rat(-1);
  d.b_const = Rat(m - 3);
  if (odd) {
    d.p1 = rat(7, 4) - rat(r, 2);
    d.p0 = rat(5, 8) - rat(r, 4);
  } else {
    d.p1 = -rat(r - 4, 2);
    d.p0 = -rat(r - 3, 4);
  }

  if (r == 1) {
    d.mnat_basis = {e(1)};
  } else if (r == 2) {
    d.mnat_basis = {wsub(e(1), e(2)), wadd(e(1), e(2))};
  } else {
    for (long i = 1; i < r; ++i) d.mnat_basis.push_back(wsub(e(i), e(i + 1)));
    d.mnat_basis.push_back(wadd(e(r - 1), e(r)));
  }
  d.ns_pi1bar = {wsub(unit(d.dim, 0), e(1))};
  return d;
}

AlgebraData make_d21(long m, long n) {
  if (m <= 0 || n <= 0 || std::gcd(m, n) != 1 || (m == 1 && n == 1))
    throw std::invalid_argument("D(2,1;m/n) requires coprime positive m, n with (m,n) != (1,1)");
  AlgebraData d;
  {
    std::ostringstream os;
    os << "D(2,1;" << m << "/" << n << ")";
    d.name = os.str();
  }
  d.family = Family::D21;
  d.d21_m = m;
  d.d21_n = n;
  const Rat a = rat(m, n);
  d.coord_names = {"e1", "e2", "e3"};
  d.dim = 3;
  d.hnat_coords = {1, 2};
  d.gram.assign(3, std::vector<Rat>(3, Rat(0)));
  d.gram[0][0] = rat(1, 2);
  d.gram[1][1] = -1 / (2 * (1 + a));
  d.gram[2][2] = -a / (2 * (1 + a));
  d.theta = unit(3, 0, Rat(2));
  d.h_dual = Rat(0);

  Weight th1 = unit(3, 1, Rat(2));  // 2 e2
  Weight th2 = unit(3, 2, Rat(2));  // 2 e3
  d.ideals.push_back({th1, -2 / (1 + a), -(1 + a), Rat(-1), -1, -2 / (1 + a)});
  d.ideals.push_back({th2, -2 * a / (1 + a), -(1 + a) / a, Rat(-1), -1, -2 * a / (1 + a)});

  d.delta_nat_plus = {th1, th2};
  d.simple_nat = {th1, th2};
  Weight e2 = unit(3, 1), e3 = unit(3, 2);
  d.delta_half_bar = {wadd(e2, e3), wsub(e2, e3), wsub(e3, e2),
                      wscale(Rat(-1), wadd(e2, e3))};
  d.xi = wadd(e2, e3);
  d.eps_R = 0;
  d.dim_g_half = 4;
  d.dim_h = 3;

  d.eta_min_options = {wsub(e2, e3), wsub(e3, e2)};
  d.delta_half_pos_options = {{wadd(e2, e3), wsub(e2, e3)}, {wadd(e2, e3), wsub(e3, e2)}};
  d.rho_R_options = {e2, e3};
  d.rho_nat = wadd(e2, e3);

  d.has_k0 = false;
  d.k_crit = Rat(0);
  d.u_norm = Rat(0);  // no common normalization: the two ideals differ
  d.b_const = Rat(1);
  d.p1 = Rat(1);
  d.p0 = rat(m * n, (m + n) * (m + n));

  d.mnat_basis = {th1, th2};
  d.ns_pi1bar = {wsub(wscale(rat(1, 2), d.theta), d.xi)};
  return d;
}

AlgebraData make_f4() {
  AlgebraData d;
  d.name = "F(4)";
  d.family = Family::F4;
  d.coord_names = {"d1", "e1", "e2", "e3"};
  d.dim = 4;
  d.hnat_coords = {1, 2, 3};
  d.gram.assign(4, std::vector<Rat>(4, Rat(0)));
  d.gram[0][0] = Rat(2);
  for (int i = 1; i < 4; ++i) d.gram[i][i] = rat(-2, 3);
  d.theta = unit(4, 0);
  d.h_dual = Rat(-2);

  auto e = [&](int i, const Rat& c = Rat(1)) { return unit(4, i, c); };
  d.ideals.push_back({wadd(e(1), e(2)), rat(-10, 3), rat(-3, 2), Rat(-1), -1, rat(-4, 3)});

  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      d.delta_nat_plus.push_back(wsub(e(i), e(j)));
      d.delta_nat_plus.push_back(wadd(e(i), e(j)));
    }
  for (int i = 1; i <= 3; ++i) d.delta_nat_plus.push_back(e(i));
  d.simple_nat = {wsub(e(1), e(2)), wsub(e(2), e(3)), e(3)};

  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        d.delta_half_bar.push_back(
            wadd(wadd(e(1, rat(s1, 2)), e(2, rat(s2, 2))), e(3, rat(s3, 2))));
  d.xi = wadd(wadd(e(1, rat(1, 2)), e(2, rat(1, 2))), e(3, rat(1, 2)));
  d.eps_R = 0;
  d.dim_g_half = 8;
  d.dim_h = 4;

  Weight etaA = wadd(wadd(e(1, rat(1, 2)), e(2, rat(-1, 2))), e(3, rat(-1, 2)));
  Weight etaB = wscale(Rat(-1), etaA);
  d.eta_min_options = {etaA, etaB};
  std::vector<Weight> posA, posB;  // posA: all with +e1/2; posB: replace etaB's negative
  for (const auto& w : d.delta_half_bar) {
    if (w[1] > 0) posA.push_back(w);
    if (w[1] > 0 || w == etaB) posB.push_back(w);
  }
  posB.erase(std::find(posB.begin(), posB.end(), etaA));
  d.delta_half_pos_options = {posA, posB};
  d.rho_R_options = {e(1), d.xi};
  d.rho_nat = wadd(wadd(e(1, rat(5, 2)), e(2, rat(3, 2))), e(3, rat(1, 2)));

  d.has_k0 = true;
  d.k0 = rat(-2, 3);
  d.k_crit = Rat(2);
  d.u_norm = rat(-4, 3);
  d.b_const = Rat(4);
  d.p1 = Rat(0);
  d.p0 = rat(-4, 9);

  d.mnat_basis = {wsub(e(1), e(2)), wsub(e(2), e(3)), wadd(e(2), e(3))};
  d.ns_pi1bar = {wsub(wscale(rat(1, 2), d.theta), d.xi)};
  return d;
}

AlgebraData make_g3() {
  AlgebraData d;
  d.name = "G(3)";
  d.family = Family::G3;
  d.coord_names = {"d1", "e1", "e2"};
  d.dim = 3;
  d.hnat_coords = {1, 2};
  d.gram.assign(3, std::vector<Rat>(3, Rat(0)));
  d.gram[0][0] = rat(1, 2);
  d.gram[1][1] = d.gram[2][2] = rat(-1, 2);
  d.gram[1][2] = d.gram[2][1] = rat(1, 4);
  d.theta = unit(3, 0, Rat(2));
  d.h_dual = rat(-3, 2);

  auto e = [&](int i, const Rat& c = Rat(1)) { return unit(3, i, c); };
  Weight e1 = e(1), e2 = e(2);
  Weight th1 = wadd(e1, e(2, Rat(2)));  // highest root of G2 in this basis
  d.ideals.push_back({th1, Rat(-3), rat(-4, 3), Rat(-1), -1, rat(-3, 2)});

  d.delta_nat_plus = {e1, wsub(e2, e1), e2, wadd(e1, e2), wadd(e(1, Rat(2)), e2), th1};
  d.simple_nat = {e1, wsub(e2, e1)};

  d.delta_half_bar = {e1, wscale(Rat(-1), e1), e2, wscale(Rat(-1), e2),
                      wadd(e1, e2), wscale(Rat(-1), wadd(e1, e2))};
  d.xi = wadd(e1, e2);
  d.eps_R = 1;
  d.dim_g_half = 7;
  d.dim_h = 3;

  d.eta_min_options = {e1};
  d.delta_half_pos_options = {{e1, e2, wadd(e1, e2)}};
  d.rho_R_options = {wadd(e1, e2)};
  d.rho_nat = wadd(e(1, Rat(2)), e(2, Rat(3)));

  d.has_k0 = true;
  d.k0 = rat(-3, 4);
  d.k_crit = rat(3, 2);
  d.u_norm = rat(-3, 2);
  d.b_const = Rat(3);
  d.p1 = rat(1, 4);
  d.p0 = rat(-3, 8);

  d.mnat_basis = {wadd(e(1, Rat(2)), e2), wsub(e2, e1)};
  d.ns_pi1bar = {wsub(wscale(rat(1, 2), d.theta), d.xi)};
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Derived quantities and validation
// ---------------------------------------------------------------------------

Weight rho_g(const AlgebraData& d) {
  Rat c = rat(1, 2) - rat(d.dim_g_half, 4);
  return wadd(d.rho_nat, wscale(c, d.theta));
}

void derive_p_poly(const AlgebraData& d, std::size_t choice, Rat& out_p1, Rat& out_p0) {
  const Weight& rho_R = d.rho_R_options[choice];
  const Weight& eta = d.eta_min_options[choice];
  Rat cross = d.form(rho_R, wsub(wscale(Rat(2), d.rho_nat), rho_R));
  Rat cst = Rat(1) + 2 * cross - d.h_dual * rat(d.dim_g_half, 4);
  if (d.eps_R == 0) {
    Rat t = d.form(wsub(d.rho_nat, rho_R), eta);
    cst -= 4 * t * t;
  }
  // p(k) = k^2 + (2 - dim g_{1/2}/4) k + cst
  out_p1 = Rat(2) - rat(d.dim_g_half, 4);
  out_p0 = cst;
}

void validate(const AlgebraData& d) {
  const std::string& c = d.name;
  require(static_cast<int>(d.coord_names.size()) == d.dim, c, "coord count");
  require(d.form(d.theta, d.theta) == 2, c, "(theta|theta) != 2");
  require(d.dim_g_half == -2 * (d.h_dual - 2), c, "dim g_1/2 != -2(h_dual - 2)");
  require(static_cast<int>(d.delta_half_bar.size()) + d.eps_R == d.dim_g_half, c,
          "|half weights| + eps != dim g_1/2");

  // Delta_bar_{1/2} is symmetric under negation (as a multiset).
  {
    auto s = d.delta_half_bar;
    for (const auto& w : d.delta_half_bar) {
      auto it = std::find(s.begin(), s.end(), wscale(Rat(-1), w));
      require(it != s.end(), c, "half weights not negation-symmetric");
      s.erase(it);
    }
  }

  require(d.eta_min_options.size() == d.rho_R_options.size() &&
              d.eta_min_options.size() == d.delta_half_pos_options.size(),
          c, "choice lists mismatched");
  for (std::size_t ch = 0; ch < d.eta_min_options.size(); ++ch) {
    const auto& pos = d.delta_half_pos_options[ch];
    require(2 * pos.size() == d.delta_half_bar.size(), c, "positive system size");
    // pos together with -pos is the full multiset, and eta_min lies in pos.
    auto s = d.delta_half_bar;
    for (const auto& w : pos) {
      auto it = std::find(s.begin(), s.end(), w);
      require(it != s.end(), c, "positive system not inside half weights");
      s.erase(it);
      it = std::find(s.begin(), s.end(), wscale(Rat(-1), w));
      require(it != s.end(), c, "positive system negatives missing");
      s.erase(it);
    }
    require(std::find(pos.begin(), pos.end(), d.eta_min_options[ch]) != pos.end(), c,
            "eta_min outside its positive system");
    // rho_R = half sum of the positive system.
    Weight hs = wzero(d.dim);
    for (const auto& w : pos) hs = wadd(hs, w);
    require(wscale(rat(1, 2), hs) == d.rho_R_options[ch], c, "rho_R != half-sum");
    // eq. relating (rho_R | rho_nat - rho_R) to h_dual, eps, dim g_1/2.
    Rat lhs = d.form(d.rho_R_options[ch], wsub(d.rho_nat, d.rho_R_options[ch]));
    Rat rhs = (d.h_dual - rat(d.eps_R, 2)) / 16 * (d.dim_g_half - d.eps_R);
    require(lhs == rhs, c, "rho_R cross-term identity fails");
    // stored p(k) agrees with the derived quadratic, independently of choice.
    Rat p1, p0;
    derive_p_poly(d, ch, p1, p0);
    require(p1 == d.p1 && p0 == d.p0, c, "p(k) disagrees with derived value");
  }

  // NS odd simple roots: isotropic, x-eigenvalue 1/2, restricting to a
  // g_{1/2}-weight.
  for (const auto& b : d.ns_pi1bar) {
    require(d.form(b, b) == 0, c, "ns_pi1bar root not isotropic");
    require(d.form(b, d.theta) == 1, c, "ns_pi1bar root has wrong x-eigenvalue");
    Weight bar = d.restrict_hnat(b);
    require(std::find(d.delta_half_bar.begin(), d.delta_half_bar.end(), bar) !=
                d.delta_half_bar.end(),
            c, "ns_pi1bar restriction not a half-weight");
  }

  // rho_nat is the half-sum of Delta^nat_+, and is integral for it.
  {
    Weight hs = wzero(d.dim);
    for (const auto& a : d.delta_nat_plus) hs = wadd(hs, a);
    require(wscale(rat(1, 2), hs) == d.rho_nat, c, "rho_nat != half-sum of Delta^nat_+");
    for (const auto& a : d.delta_nat_plus)
      require(is_integer(d.pair_covee(d.rho_nat, a)), c, "rho_nat not integral");
  }

  // Ideals: norms, b-constant, M_i(k0), p(k0).
  for (const auto& id : d.ideals) {
    require(d.form(id.theta_i, id.theta_i) == id.u, c, "(theta_i|theta_i) != u_i");
    require((d.h_dual + id.hbar) / id.u == d.b_const, c, "b != (h_dual + hbar_i)/u_i");
    require(std::find(d.delta_nat_plus.begin(), d.delta_nat_plus.end(), id.theta_i) !=
                d.delta_nat_plus.end(),
            c, "theta_i not a positive root");
    if (d.has_k0) require(d.M_of(&id - d.ideals.data(), d.k0) == 0, c, "M_i(k0) != 0");
  }
  if (d.has_k0) require(d.p_of(d.k0) == 0, c, "p(k0) != 0");
  require(d.k_crit == -d.h_dual, c, "k_crit != -h_dual");

  // M^nat basis vectors are long roots (norm u of their ideal).
  for (const auto& v : d.mnat_basis) {
    bool root = false;
    for (const auto& a : d.delta_nat_plus)
      if (a == v || wscale(Rat(-1), a) == v) root = true;
    require(root, c, "M^nat basis vector is not a root");
    Rat nn = d.form(v, v);
    bool longroot = false;
    for (const auto& id : d.ideals)
      if (nn == id.u) longroot = true;
    require(longroot, c, "M^nat basis vector is not long");
  }

  // rho_g consistency.
  require(d.form(rho_g(d), d.theta) == d.h_dual - 1, c, "(rho|theta) != h_dual - 1");
  require(d.restrict_hnat(rho_g(d)) == d.restrict_hnat(d.rho_nat), c,
          "rho does not restrict to rho_nat");
}

// ---------------------------------------------------------------------------
// Lookup / parsing
// ---------------------------------------------------------------------------

namespace {

std::string normalize(std::string s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(tolower(ch));
  return t;
}

AlgebraData build(const std::string& raw) {
  std::string s = normalize(raw);
  if (s == "psl(2|2)" || s == "psl22") return make_psl22();
  if (s == "f(4)" || s == "f4") return make_f4();
  if (s == "g(3)" || s == "g3") return make_g3();
  if (s.rfind("spo(2|", 0) == 0 && s.back() == ')')
    return make_spo(std::stol(s.substr(6, s.size() - 7)));
  if (s.rfind("spo", 0) == 0 && s.find('(') == std::string::npos)
    return make_spo(std::stol(s.substr(3)));
  if (s.rfind("d(2,1;", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(6, s.size() - 7);
    auto slash = body.find('/');
    long m = std::stol(body.substr(0, slash));
    long n = slash == std::string::npos ? 1 : std::stol(body.substr(slash + 1));
    return make_d21(m, n);
  }
  if (s.rfind("d21_", 0) == 0) {
    auto us = s.find('_', 4);
    if (us != std::string::npos)
      return make_d21(std::stol(s.substr(4, us - 4)), std::stol(s.substr(us + 1)));
  }
  throw std::invalid_argument("unknown algebra id: " + raw);
}

}  // namespace

AlgebraData lookup(const std::string& id) {
  AlgebraData d = build(id);
  validate(d);
  return d;
}

std::vector<std::string> list_algebras() {
  std::vector<std::string> v = {"psl(2|2)"};
  for (long m = 3; m <= 12; ++m) v.push_back("spo(2|" + std::to_string(m) + ")");
  v.push_back("D(2,1;1/2)");
  v.push_back("D(2,1;2/3)");
  v.push_back("D(2,1;3/4)");
  v.push_back("F(4)");
  v.push_back("G(3)");
  return v;
}

// ---------------------------------------------------------------------------
// JSON dump
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json jweight(const Weight& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : w) a.push_back(rat_str(x));
  return a;
}

nlohmann::ordered_json jweights(const std::vector<Weight>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& w : v) a.push_back(jweight(w));
  return a;
}

}  // namespace

std::string AlgebraData::dump_json() const {
  nlohmann::ordered_json j;
  j["id"] = name;
  j["coords"] = coord_names;
  nlohmann::ordered_json g = nlohmann::ordered_json::array();
  for (const auto& row : gram) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    g.push_back(r);
  }
  j["gram"] = g;
  j["theta"] = jweight(theta);
  j["h_dual"] = rat_str(h_dual);
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  for (const auto& id : ideals) {
    nlohmann::ordered_json ji;
    ji["theta_i"] = jweight(id.theta_i);
    ji["hbar_i"] = rat_str(id.hbar);
    ji["M_i"] = {{"slope", rat_str(id.M_slope)}, {"shift", rat_str(id.M_shift)}};
    ji["chi_i"] = id.chi;
    ji["u_i"] = rat_str(id.u);
    ids.push_back(ji);
  }
  j["ideals"] = ids;
  j["delta_nat_plus"] = jweights(delta_nat_plus);
  j["simple_nat"] = jweights(simple_nat);
  j["delta_half_bar"] = jweights(delta_half_bar);
  j["xi"] = jweight(xi);
  j["eps_R"] = eps_R;
  j["dim_g_half"] = dim_g_half;
  j["dim_h"] = dim_h;
  j["eta_min_options"] = jweights(eta_min_options);
  j["rho_R_options"] = jweights(rho_R_options);
  j["rho_nat"] = jweight(rho_nat);
  j["has_k0"] = has_k0;
  if (has_k0) j["k0"] = rat_str(k0);
  j["k_crit"] = rat_str(k_crit);
  j["u_norm"] = rat_str(u_norm);
  j["b_const"] = rat_str(b_const);
  j["p_poly"] = {{"k2", "1"}, {"k1", rat_str(p1)}, {"k0", rat_str(p0)}};
  j["mnat_basis"] = jweights(mnat_basis);
  j["ns_pi1bar"] = jweights(ns_pi1bar);
  return j.dump();
}

}  // namespace wmin
