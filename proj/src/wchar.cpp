#include "wmin/wchar.hpp"

#include "wmin/unitarity.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

namespace wmin {

namespace {

AffineWeight aw(const Rat& a0, const Rat& dcoef, Weight fin) {
  return AffineWeight{a0, dcoef, std::move(fin)};
}

AffineWeight aadd(const AffineWeight& a, const AffineWeight& b) {
  return {a.a0 + b.a0, a.dcoef + b.dcoef, wadd(a.fin, b.fin)};
}

AffineWeight asub(const AffineWeight& a, const AffineWeight& b) {
  return {a.a0 - b.a0, a.dcoef - b.dcoef, wsub(a.fin, b.fin)};
}

Rat h_of(const AlgebraData& d, const Rat& k) {
  Rat h = k + d.h_dual;
  if (h == 0) throw std::invalid_argument("wchar: critical level k = -h_dual");
  return h;
}

void check_choice(const AlgebraData& d, std::size_t choice) {
  if (choice >= d.rho_R_options.size())
    throw std::invalid_argument("wchar: invalid eta_min choice for " + d.name);
}

Weight unit(int dim, int i) {
  Weight w = wzero(dim);
  w[i] = 1;
  return w;
}

// Exact square root of a nonnegative rational, when it exists.
std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), r.get_den().get_mpz_t());
  if (sn * sn != r.get_num() || sd * sd != r.get_den()) return std::nullopt;
  Rat s(sn, sd);
  s.canonicalize();
  return s;
}

}  // namespace

TwistData twist_data(const AlgebraData& d, std::size_t choice) {
  check_choice(d, choice);
  const Weight& rho_R = d.rho_R_options[choice];
  Rat e4 = rat(d.eps_R, 4);
  Weight gp = wsub(wsub(wscale(Rat(2), rho_R), rho_g(d)), wscale(e4, d.theta));
  Weight gh = wsub(rho_R, wscale(e4 / 2, d.theta));
  TwistData td;
  td.gamma_prime = gp;
  td.gamma_half = gh;
  td.rho_tw = aw(d.h_dual, Rat(0), wscale(Rat(-1), gp));
  td.s_gh = rat(-d.dim_g_half, 16);
  return td;
}

Rat s_fg(const AlgebraData& d, const Rat& k) {
  return k * rat(d.dim_g_half - 2 * d.eps_R, 8) / h_of(d, k);
}

Rat a_of_k(const AlgebraData& d, const Rat& k) {
  return s_fg(d, k) + rat(-d.dim_g_half, 16);
}

AffineWeight rho_hat_ns(const AlgebraData& d) {
  return aw(d.h_dual, Rat(0), rho_g(d));
}

AffineWeight nu_hat_s(const AlgebraData& d, const Rat& k, const Weight& nu,
                      const Rat& s, std::size_t choice) {
  check_choice(d, choice);
  return aw(k, Rat(0), wadd(wadd(wscale(s, d.theta), nu), d.rho_R_options[choice]));
}

AffineWeight nu_hat_t_ns(const AlgebraData& d, const Rat& k, const Weight& nu,
                         const Rat& t) {
  return aw(k, Rat(0), wadd(wscale(t, d.theta), nu));
}

Rat ell_of_affine(const AlgebraData& d, const Rat& k, const AffineWeight& lamhat,
                  std::size_t choice) {
  if (lamhat.a0 != k)
    throw std::invalid_argument("ell_of_affine: weight has level " + rat_str(lamhat.a0) +
                                ", expected " + rat_str(k));
  Rat h = h_of(d, k);
  TwistData td = twist_data(d, choice);
  Rat n = aform(d, lamhat, lamhat) + 2 * aform(d, lamhat, td.rho_tw);
  return n / (2 * h) - pairing_xD(d, lamhat) + a_of_k(d, k);
}

Rat ell_of_affine_direct(const AlgebraData& d, const Rat& k,
                         const AffineWeight& lamhat, std::size_t choice) {
  if (lamhat.a0 != k)
    throw std::invalid_argument("ell_of_affine_direct: weight has level " +
                                rat_str(lamhat.a0) + ", expected " + rat_str(k));
  Rat h = h_of(d, k);
  TwistData td = twist_data(d, choice);
  // Finite-part form of the formula; agrees with ell_of_affine on weights with
  // no delta-component (the only ones that arise as highest weights here).
  Rat n = d.form(lamhat.fin, lamhat.fin) - 2 * d.form(lamhat.fin, td.gamma_prime);
  return n / (2 * h) - pairing_xD(d, lamhat) + a_of_k(d, k);
}

bool is_degenerate(const AlgebraData& d, const AffineWeight& lamhat) {
  // Pairing with (delta - theta)^vee = delta - theta:
  // (lam | delta - theta) = a0 - (fin|theta).
  Rat p = lamhat.a0 - d.form(lamhat.fin, d.theta);
  return is_integer(p) && p >= 0;
}

bool nu_hat_s_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                      const Rat& s, std::size_t choice) {
  check_choice(d, choice);
  if (!in_Pk_plus(d, k, nu)) return false;
  if (ramond_extremal(d, k, nu, choice)) return false;
  if (d.eps_R == 1) return s == (2 * k + 1) / 4;
  Weight mu = wadd(wsub(nu, d.rho_R_options[choice]), d.rho_nat);
  Rat X = d.form(mu, eta_min(d, choice));
  if (X < 0) X = -X;
  for (const Rat& sp : {s, Rat(k + 1 - s)}) {
    Rat t = sp - (k + 1) / 2;
    if (t >= 0 && t < X) return true;
  }
  return false;
}

Rat s0_of(const AlgebraData& d, const Rat& k, const Weight& nu, std::size_t choice) {
  check_choice(d, choice);
  if (d.eps_R == 1) return (2 * k + 1) / 4;
  Weight mu = wadd(wsub(nu, d.rho_R_options[choice]), d.rho_nat);
  return (k + 1) / 2 - d.form(mu, eta_min(d, choice));
}

std::vector<Rat> t0_options(const AlgebraData& d, const Rat& k, const Weight& nu) {
  Rat p = d.form(nu, d.xi);
  return {p, k + 1 - p};
}

std::vector<AffineWeight> pi1bar_nu(const AlgebraData& d, const Rat& k,
                                    const Weight& nu, std::size_t choice) {
  check_choice(d, choice);
  Rat half = rat(1, 2);
  if (d.family == Family::Psl22) {
    // delta_1 - eps_2 and eps_1 - delta_2, both shifted by -delta/2.
    Weight b1 = wsub(unit(d.dim, 0), unit(d.dim, 3));
    Weight b2 = wsub(unit(d.dim, 2), unit(d.dim, 1));
    return {aw(Rat(0), -half, b1), aw(Rat(0), -half, b2)};
  }
  if (d.family == Family::Spo2m && d.spo_m == 3) {
    Weight e1 = unit(d.dim, 1);
    if (wis_zero(nu)) return {aw(Rat(0), -half, wadd(unit(d.dim, 0), e1))};
    Rat M1 = d.M_of(0, k);
    if (nu == wscale(M1 / 2, e1))
      return {aw(Rat(0), half, wsub(unit(d.dim, 0), e1))};
    throw std::invalid_argument(
        "pi1bar_nu: for spo(2|3) only nu = 0 and nu = (M_1/2) eps_1 are massless "
        "highest weights with a known simple-root set");
  }
  Weight fin = wadd(wscale(half, d.theta), eta_min(d, choice));
  return {aw(Rat(0), -half, fin)};
}

std::vector<AffineWeight> pi1bar_ns(const AlgebraData& d) {
  std::vector<AffineWeight> out;
  for (const Weight& b : d.ns_pi1bar) out.push_back(aw(Rat(0), Rat(0), b));
  return out;
}

int char_arity(const AlgebraData& d) { return static_cast<int>(d.simple_nat.size()); }

ExpVec enc_weight(const AlgebraData& d, const Weight& w) {
  ExpVec e(d.simple_nat.size());
  for (std::size_t i = 0; i < d.simple_nat.size(); ++i) {
    Rat p = d.pair_covee(w, d.simple_nat[i]);
    if (!is_integer(p))
      throw std::invalid_argument("enc_weight: non-integral coroot pairing " + rat_str(p));
    e[i] = to_long(p.get_num());
  }
  return e;
}

Encoder coroot_encoder(const AlgebraData& d) {
  Encoder enc;
  enc.arity = char_arity(d);
  enc.map = [d](const Weight& w) { return enc_weight(d, w); };
  return enc;
}

unsigned thread_count() {
  if (const char* e = std::getenv("WMIN_THREADS")) {
    long v = std::strtol(e, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

// --- Weyl-translation sums ---------------------------------------------------

WeylSum weyl_translation_sum(const AlgebraData& d, const Encoder& enc,
                             const AffineWeight& lam, const AffineWeight& rho_like,
                             const std::vector<AffineWeight>& pi1,
                             const Rat& pref_q, const Rat& rel_order) {
  if (rel_order <= 0) throw std::invalid_argument("weyl_translation_sum: order <= 0");
  const AffineWeight lamr = aadd(lam, rho_like);
  const Rat rho_q = ev(d, rho_like).qexp;
  const Rat lead = pref_q + ev(d, lam).qexp;
  const Rat qmax = lead + rel_order;

  // The q-exponent of every numerator term over t_alpha W is independent of
  // the Weyl part; its growth in alpha is an inhomogeneous positive-definite
  // quadratic, which drives the lattice enumeration.
  auto E = [&](const Weight& alpha) -> Rat {
    return ev(d, translate(d, alpha, lamr)).qexp;
  };
  const Rat E0 = E(wzero(d.dim));
  std::vector<Weight> alphas = enumerate_lattice_leq(
      d.mnat_basis, [&](const Weight& a) -> Rat { return E(a) - E0; }, rel_order);
  std::sort(alphas.begin(), alphas.end());

  const auto& W = weyl_group(d);

  struct AlphaData {
    Rat qbase;                // q-exponent of the numerator monomial
    std::vector<Rat> tbeta;   // q-shift of each inverse factor
    Rat minexp;               // lowest exponent produced by this alpha
  };
  std::vector<AlphaData> ad;
  std::vector<const Weight*> kept;
  for (const Weight& a : alphas) {
    AlphaData x;
    x.qbase = pref_q + E(a) - rho_q;
    x.minexp = x.qbase;
    for (const AffineWeight& b : pi1) {
      Rat t = -ev(d, translate(d, a, b)).qexp;
      if (t < 0) x.minexp -= t;
      x.tbeta.push_back(t);
    }
    if (x.minexp >= qmax) continue;
    ad.push_back(std::move(x));
    kept.push_back(&a);
  }
  if (ad.empty()) throw std::logic_error("weyl_translation_sum: empty enumeration");

  // Common grid and offset.
  long L = 2;
  Rat offset = qmax;
  for (const auto& x : ad) {
    L = lcm_long(L, to_long(x.qbase.get_den()));
    for (const Rat& t : x.tbeta) L = lcm_long(L, to_long(t.get_den()));
    offset = std::min(offset, x.minexp);
  }
  L = lcm_long(L, to_long(qmax.get_den()));
  L = lcm_long(L, to_long(offset.get_den()));

  // Exponential directions of the beta-factors are Weyl-dependent but
  // translation-independent; the q^0 factors each term must be completed by
  // are the pointwise maxima of the per-term multisets.
  std::vector<std::vector<ExpVec>> bmono(W.size());
  for (std::size_t wi = 0; wi < W.size(); ++wi)
    for (const AffineWeight& b : pi1)
      bmono[wi].push_back(
          enc.map(wscale(Rat(-1), d.restrict_hnat(apply_action(W[wi].action, b.fin)))));
  std::map<ExpVec, int> P;
  for (const auto& x : ad) {
    bool any0 = false;
    for (const Rat& t : x.tbeta)
      if (t == 0) any0 = true;
    if (!any0) continue;
    for (std::size_t wi = 0; wi < W.size(); ++wi) {
      std::map<ExpVec, int> cnt;
      for (std::size_t j = 0; j < pi1.size(); ++j)
        if (x.tbeta[j] == 0) ++cnt[bmono[wi][j]];
      for (const auto& [m, c] : cnt) {
        int& v = P[m];
        v = std::max(v, c);
      }
    }
  }

  const std::size_t nterms = ad.size() * W.size();
  auto build = [&](std::size_t idx) -> QSeries {
    const std::size_t ai = idx / W.size(), wi = idx % W.size();
    const AlphaData& x = ad[ai];
    AffineWeight img = weyl_act_affine(d, W[wi].action, translate(d, *kept[ai], lamr));
    EvWeight e = ev(d, asub(img, rho_like));
    if (pref_q + e.qexp != x.qbase)
      throw std::logic_error("weyl_translation_sum: Weyl-dependent q-exponent");
    QSeries ts = QSeries::zero(enc.arity, L, x.qbase, qmax);
    ts.add_at(x.qbase, Laurent::monomial(enc.arity, enc.map(e.fin), rat(W[wi].det)));
    std::map<ExpVec, int> used;
    for (std::size_t j = 0; j < pi1.size(); ++j) {
      const ExpVec& m = bmono[wi][j];
      if (x.tbeta[j] == 0) {
        ++used[m];
      } else {
        ts *= expand_inverse_factor(enc.arity, L, Rat(1), x.tbeta[j], m, qmax - x.qbase);
      }
    }
    for (const auto& [m, c] : P) {
      auto it = used.find(m);
      int have = it == used.end() ? 0 : it->second;
      for (int r = have; r < c; ++r) ts.mul_factor(Rat(1), Rat(0), m);
    }
    return ts;
  };

  std::vector<QSeries> parts(nterms);
  unsigned nt = std::min<unsigned>(thread_count(), static_cast<unsigned>(nterms));
  if (nt > 1) {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < nterms; i += nt) parts[i] = build(i);
      });
    for (auto& th : pool) th.join();
  } else {
    for (std::size_t i = 0; i < nterms; ++i) parts[i] = build(i);
  }

  QSeries acc = QSeries::zero(enc.arity, L, offset, qmax);
  for (const QSeries& ts : parts)
    for (const auto& [n, c] : ts.raw())
      acc.add_at(ts.offset() + rat(n, ts.denom_lcm()), c);

  WeylSum out;
  out.series = std::move(acc);
  for (const auto& [m, c] : P) out.q0_cleared.emplace_back(m, c);
  return out;
}

// --- denominator factor pipelines --------------------------------------------

namespace {

// Multiply s by the fermionic factors of the Ramond denominator,
// prod_{n>=1} prod_{eta in (pos)'} (1 + q^{n-1} e^{-eta}) (1 + q^n e^{eta}).
void mul_fermionic_R(const AlgebraData& d, const Encoder& enc, std::size_t choice,
                     QSeries& s) {
  const ExpVec zero(enc.arity, 0);
  for (long n = 1;; ++n) {
    Rat t1 = rat(n - 1), t2 = rat(n);
    if (t1 >= s.rel_order()) break;
    for (const Weight& eta : d.delta_half_pos_options[choice]) {
      s.mul_factor(Rat(1), t1, enc.map(wscale(Rat(-1), eta)));
      if (t2 < s.rel_order()) s.mul_factor(Rat(1), t2, enc.map(eta));
    }
    if (d.eps_R == 1) s.mul_factor(Rat(1), t1, zero);
  }
}

// Multiply s by the fermionic factors of the NS denominator,
// prod_{n>=1} prod_{mu in bar-Delta_{1/2} (+ 0 if eps)} (1 + q^{n-1/2} e^{mu}).
void mul_fermionic_NS(const AlgebraData& d, const Encoder& enc, QSeries& s) {
  const ExpVec zero(enc.arity, 0);
  for (long n = 1;; ++n) {
    Rat t = rat(2 * n - 1, 2);
    if (t >= s.rel_order()) break;
    for (const Weight& mu : d.delta_half_bar) s.mul_factor(Rat(1), t, enc.map(mu));
    if (d.eps_R == 1) s.mul_factor(Rat(1), t, zero);
  }
}

// Divide s exactly by the bosonic factors shared by both denominators,
// prod_{n>=1} (1-q^n)^{dim h} prod_{al in Delta^nat_+} (1-q^{n-1}e^{-al})(1-q^n e^{al}).
// The q^0 binomials (1 - e^{-al}) divide exactly level by level.
void div_bosonic(const AlgebraData& d, const Encoder& enc, QSeries& s) {
  const ExpVec zero(enc.arity, 0);
  for (long n = 1;; ++n) {
    Rat t1 = rat(n - 1), t2 = rat(n);
    if (t1 >= s.rel_order()) break;
    for (const Weight& al : d.delta_nat_plus) {
      s.div_factor(Rat(-1), t1, enc.map(wscale(Rat(-1), al)));
      if (t2 < s.rel_order()) s.div_factor(Rat(-1), t2, enc.map(al));
    }
    if (t2 < s.rel_order())
      for (int r = 0; r < d.dim_h; ++r) s.div_factor(Rat(-1), t2, zero);
  }
}

void div_q0_cleared(QSeries& s, const std::vector<std::pair<ExpVec, int>>& P) {
  for (const auto& [m, c] : P)
    for (int r = 0; r < c; ++r) s.div_factor(Rat(1), Rat(0), m);
}

void require_dominant(const AlgebraData& d, const Rat& k, const Weight& nu,
                      const char* who) {
  if (!level_admissible(d, k))
    throw std::invalid_argument(std::string(who) + ": level k = " + rat_str(k) +
                                " is not admissible for " + d.name);
  if (!in_Pk_plus(d, k, nu))
    throw std::invalid_argument(std::string(who) + ": nu is not in P^+_k");
}

void check_orthogonal(const AlgebraData& d, const AffineWeight& lamr,
                      const std::vector<AffineWeight>& pi1, const char* who) {
  for (const AffineWeight& b : pi1) {
    if (aform(d, b, b) != 0)
      throw std::logic_error(std::string(who) + ": non-isotropic simple root");
    if (aform(d, lamr, b) != 0)
      throw std::invalid_argument(
          std::string(who) +
          ": highest weight is not orthogonal to the odd simple-root set; the "
          "character formula does not apply to this weight");
  }
}

}  // namespace

// --- characters ---------------------------------------------------------------

QSeries char_numerator_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                               const Rat& ell, std::size_t choice, const Rat& order) {
  check_choice(d, choice);
  require_dominant(d, k, nu, "char_numerator_typical");
  Rat A = A_bound(d, k, nu);
  Rat B = B_bound(d, k, nu, choice);
  if (ell < A)
    throw std::invalid_argument("char_numerator_typical: ell < A(k,nu)");
  Rat scale(1);
  if (ell == A) {
    if (d.eps_R == 0)
      throw std::invalid_argument(
          "char_numerator_typical: ell = A with theta/2 not a root is massless; "
          "use char_ramond_massless");
    if (ramond_extremal(d, k, nu, choice))
      throw std::invalid_argument(
          "char_numerator_typical: ell = A with nu Ramond extremal is massless; "
          "use char_ramond_massless");
    scale = rat(1, 2);
  }
  // When the parameter s is rational, reject degenerate weights.
  if (auto r = rat_sqrt(h_of(d, k) * (ell - B))) {
    Rat vertex = (k + 1) / 2 - rat(d.eps_R, 4);
    for (const Rat& s : {Rat(vertex + *r), Rat(vertex - *r)})
      if (is_degenerate(d, nu_hat_s(d, k, nu, s, choice)))
        throw std::invalid_argument(
            "char_numerator_typical: nu_hat_s is degenerate at s = " + rat_str(s));
  }
  // All terms of the sum depend on s only through the overall power q^{ell(s)},
  // so the series is computed at the rational anchor s = (k+1)/2 - eps/4
  // (where ell = B) and shifted to the requested ell.
  Rat h = h_of(d, k);
  Rat anchor = (k + 1) / 2 - rat(d.eps_R, 4);
  AffineWeight lam = nu_hat_s(d, k, nu, anchor, choice);
  TwistData td = twist_data(d, choice);
  Rat pref = (aform(d, lam, lam) + 2 * aform(d, lam, td.rho_tw)) / (2 * h) + a_of_k(d, k);
  if (pref + ev(d, lam).qexp != B)
    throw std::logic_error("char_numerator_typical: anchor normalization");
  Encoder enc = coroot_encoder(d);
  WeylSum ws = weyl_translation_sum(d, enc, lam, td.rho_tw, {}, pref, order);
  QSeries s = std::move(ws.series);
  s *= scale;
  s = s.mul_term(Rat(1), ell - B, enc.map(wscale(Rat(-1), d.rho_R_options[choice])));
  return s;
}

QSeries char_ramond_typical(const AlgebraData& d, const Rat& k, const Weight& nu,
                            const Rat& ell, std::size_t choice, const Rat& order) {
  QSeries s = char_numerator_typical(d, k, nu, ell, choice, order);
  Encoder enc = coroot_encoder(d);
  mul_fermionic_R(d, enc, choice, s);
  div_bosonic(d, enc, s);
  return s;
}

QSeries char_ramond_massless(const AlgebraData& d, const Rat& k, const Weight& nu,
                             std::size_t choice, const Rat& order) {
  check_choice(d, choice);
  require_dominant(d, k, nu, "char_ramond_massless");
  Rat A = A_bound(d, k, nu);
  if (!massless_predicate(d, k, nu, A, choice))
    throw std::invalid_argument(
        "char_ramond_massless: (nu, A(k,nu)) is not massless (theta/2 is a root "
        "and nu is not Ramond extremal)");
  Rat s0 = s0_of(d, k, nu, choice);
  AffineWeight lam = nu_hat_s(d, k, nu, s0, choice);
  if (is_degenerate(d, lam))
    throw std::invalid_argument("char_ramond_massless: nu_hat_{s0} is degenerate");
  TwistData td = twist_data(d, choice);
  std::vector<AffineWeight> pi1 = pi1bar_nu(d, k, nu, choice);
  check_orthogonal(d, aadd(lam, td.rho_tw), pi1, "char_ramond_massless");
  Rat h = h_of(d, k);
  Rat pref = (aform(d, lam, lam) + 2 * aform(d, lam, td.rho_tw)) / (2 * h) + a_of_k(d, k);
  if (pref + ev(d, lam).qexp != A)
    throw std::logic_error("char_ramond_massless: leading-exponent normalization");
  Encoder enc = coroot_encoder(d);
  WeylSum ws = weyl_translation_sum(d, enc, lam, td.rho_tw, pi1, pref, order);
  QSeries s = std::move(ws.series);
  s *= rat(1, 1 + d.eps_R);
  s = s.mul_term(Rat(1), Rat(0), enc.map(wscale(Rat(-1), d.rho_R_options[choice])));
  mul_fermionic_R(d, enc, choice, s);
  div_bosonic(d, enc, s);
  div_q0_cleared(s, ws.q0_cleared);
  return s;
}

QSeries char_ns_massless(const AlgebraData& d, const Rat& k, const Weight& nu,
                         std::size_t choice, const Rat& order) {
  check_choice(d, choice);
  require_dominant(d, k, nu, "char_ns_massless");
  Rat t0 = t0_options(d, k, nu)[0];
  AffineWeight lam = nu_hat_t_ns(d, k, nu, t0);
  if (is_degenerate(d, lam))
    throw std::invalid_argument(
        "char_ns_massless: nu_hat_{t0} is degenerate at t0 = " + rat_str(t0));
  AffineWeight rho = rho_hat_ns(d);
  std::vector<AffineWeight> pi1 = pi1bar_ns(d);
  check_orthogonal(d, aadd(lam, rho), pi1, "char_ns_massless");
  Rat h = h_of(d, k);
  Rat pref = (aform(d, lam, lam) + 2 * aform(d, lam, rho)) / (2 * h);
  Encoder enc = coroot_encoder(d);
  WeylSum ws = weyl_translation_sum(d, enc, lam, rho, pi1, pref, order);
  QSeries s = std::move(ws.series);
  mul_fermionic_NS(d, enc, s);
  div_bosonic(d, enc, s);
  div_q0_cleared(s, ws.q0_cleared);
  return s;
}

// --- windowed denominators ----------------------------------------------------

namespace {

// A strictly positive linear functional (over the encoded exponent lattice)
// on the expansion directions of the q^0 geometric factors; used both to pick
// the expansion direction and to bound the number of geometric terms that can
// influence the final window.
struct CFun {
  std::vector<Rat> g;  // c(e) = sum_i g[i] e[i]
  Rat c_of(const ExpVec& e) const {
    Rat v(0);
    for (std::size_t i = 0; i < g.size(); ++i) v += g[i] * rat(e[i]);
    return v;
  }
  Rat coeff_sum_abs() const {
    Rat v(0);
    for (const Rat& x : g) v += x < 0 ? -x : x;
    return v;
  }
};

// Builds c = -( . | y0) - lambda ( . | y_eta) with y0 the sum of the
// fundamental weights and y_eta the sum of the chosen positive half-weights,
// with lambda > 0 small enough that c is strictly positive on all of `dirs`
// (weights that must count as positive: the positive roots and, in the Ramond
// sector, the chosen half-weights).
CFun make_cfun(const AlgebraData& d, const Encoder& enc,
               const std::vector<Weight>& dirs, const Weight& y_eta) {
  std::vector<Weight> fw = fundamental_weights(d);
  Weight y0 = wzero(d.dim);
  for (const Weight& w : fw) y0 = wadd(y0, w);
  Rat lambda(1);
  for (const Weight& w : dirs) {
    Rat v1 = -d.form(w, y0), v2 = -d.form(w, y_eta);
    if (v1 > 0) continue;
    if (v1 == 0) {
      if (v2 <= 0)
        throw std::logic_error("make_cfun: no consistent expansion direction");
      continue;
    }
    // v1 < 0: need v1 + lambda v2 > 0, impossible unless... (directions are
    // required to be positive, so this is a catalog inconsistency).
    throw std::logic_error("make_cfun: direction with negative root-height");
  }
  // Shrink lambda until no positivity is lost on directions with v2 < 0.
  for (const Weight& w : dirs) {
    Rat v1 = -d.form(w, y0), v2 = -d.form(w, y_eta);
    if (v1 > 0 && v2 < 0) {
      Rat cap = v1 / (-2 * v2);
      if (cap < lambda) lambda = cap;
    }
  }
  CFun c;
  // Express the functional in encoded coordinates: enc(w) are the coefficients
  // of the restriction of w over the fundamental weights.
  for (const Weight& w : fw) c.g.push_back(-d.form(w, y0) - lambda * d.form(w, y_eta));
  // Verify strict positivity (through the encoding) on every direction.
  for (const Weight& w : dirs)
    if (c.c_of(enc.map(w)) <= 0)
      throw std::logic_error("make_cfun: functional not strictly positive");
  return c;
}

// Multiplies s by the truncated geometric expansion of 1/(1 + sc e^{m}) where
// the direction weight w is positive for c (so e^{-w} is "small"):
//   1/(1 + sc e^{w}) = sum_{j>=1} (-1)^{j-1} sc^{-j} e^{-j w}   ... large side
//   1/(1 + sc e^{-w}) = sum_{j>=0} (-sc)^j e^{-j w}             ... small side
// jmax bounds the terms that can reach the final window (|c| budget cbound).
void mul_geom_q0(QSeries& s, const Encoder& enc, const CFun& c, const Rat& sc,
                 const Weight& w, bool small_side, const Rat& cbound) {
  ExpVec m = enc.map(w);
  Rat cw = c.c_of(m);
  if (cw <= 0) throw std::logic_error("mul_geom_q0: direction is not positive");
  long jmax = to_long(rat_floor(cbound / cw));
  Laurent pol(enc.arity);
  if (small_side) {
    Rat coef(1);
    for (long j = 0; j <= jmax; ++j) {
      pol.add_term(expvec_scale(expvec_neg(m), j), coef);
      coef *= -sc;
    }
  } else {
    Rat inv = Rat(1) / sc;
    Rat coef = inv;
    for (long j = 1; j <= jmax; ++j) {
      pol.add_term(expvec_scale(expvec_neg(m), j), coef);
      coef *= -inv;
    }
  }
  QSeries f = QSeries::zero(s.arity(), s.denom_lcm(), Rat(0), s.rel_order());
  f.add_at(Rat(0), pol);
  s *= f;
}

// Drop Laurent terms whose c-value is out of reach of the final window.
void prune_c(QSeries& s, const CFun& c, const Rat& cbound) {
  QSeries out = QSeries::zero(s.arity(), s.denom_lcm(), s.offset(), s.order());
  for (const auto& [n, lp] : s.raw()) {
    Laurent kept(s.arity());
    for (const auto& [e, v] : lp.terms()) {
      Rat cv = c.c_of(e);
      if (cv >= -cbound && cv <= cbound) kept.add_term(e, v);
    }
    if (!kept.is_zero()) out.add_at(s.offset() + rat(n, s.denom_lcm()), kept);
  }
  s = std::move(out);
}

struct DenomSpec {
  bool ramond = false;
  bool inverse = false;
  std::size_t choice = 0;
};

QSeries build_denominator(const AlgebraData& d, const DenomSpec& spec, const Rat& order,
                          long window) {
  if (order <= 0) throw std::invalid_argument("denominator: order <= 0");
  if (window < 0) throw std::invalid_argument("denominator: negative window");
  check_choice(d, spec.choice);
  Encoder enc = coroot_encoder(d);
  const ExpVec zero(enc.arity, 0);

  std::vector<Weight> dirs = d.delta_nat_plus;
  Weight y_eta = wzero(d.dim);
  if (spec.ramond) {
    for (const Weight& eta : d.delta_half_pos_options[spec.choice]) {
      dirs.push_back(eta);
      y_eta = wadd(y_eta, eta);
    }
  } else {
    for (const Weight& eta : d.delta_half_bar) y_eta = wadd(y_eta, eta);
  }
  CFun c = make_cfun(d, enc, dirs, y_eta);

  // |c| budget for terms that can still reach the final window: the window
  // itself plus the drift of the q-graded factors, which is limited by the
  // q-budget (a factor with shift t contributes at most order/t times).
  Rat cbound = rat(window) * c.coeff_sum_abs();
  {
    Rat maxc(0);
    auto see = [&](const Weight& w) -> void {
      Rat cv = c.c_of(enc.map(w));
      if (cv < 0) cv = -cv;
      if (cv > maxc) maxc = cv;
    };
    for (const Weight& al : d.delta_nat_plus) see(al);
    const auto& etas =
        spec.ramond ? d.delta_half_pos_options[spec.choice] : d.delta_half_bar;
    for (const Weight& eta : etas) see(eta);
    Rat tmin = spec.ramond ? Rat(1) : rat(1, 2);
    cbound += (order / tmin) * maxc;
  }

  long L = spec.ramond ? 1 : 2;
  QSeries s = QSeries::one(enc.arity, L, order);

  auto apply = [&](const Rat& sc, const Rat& t, const Weight& w, bool invert) -> void {
    // factor (1 + sc q^t e^{w}); invert => multiply by its inverse expansion
    if (t >= s.rel_order()) return;
    if (!invert) {
      s.mul_factor(sc, t, enc.map(w));
      prune_c(s, c, cbound);
      return;
    }
    if (t > 0) {
      s *= expand_inverse_factor(enc.arity, L, sc, t, enc.map(w), s.rel_order());
      prune_c(s, c, cbound);
      return;
    }
    if (expvec_is_zero(enc.map(w))) {  // scalar factor (1 + sc)
      s *= Rat(1) / (Rat(1) + sc);
      return;
    }
    // t = 0 geometric factor: expand along the functional c.
    Rat cv = c.c_of(enc.map(w));
    if (cv < 0) {
      mul_geom_q0(s, enc, c, sc, wscale(Rat(-1), w), true, cbound);
    } else {
      mul_geom_q0(s, enc, c, sc, w, false, cbound);
    }
    prune_c(s, c, cbound);
  };

  for (long n = 1; rat(n - 1) < s.rel_order(); ++n) {
    Rat t1 = rat(n - 1), t2 = rat(n);
    // Bosonic part (numerator of the denominator formula).
    for (const Weight& al : d.delta_nat_plus) {
      apply(Rat(-1), t1, wscale(Rat(-1), al), spec.inverse);
      apply(Rat(-1), t2, al, spec.inverse);
    }
    for (int r = 0; r < d.dim_h; ++r) apply(Rat(-1), t2, wzero(d.dim), spec.inverse);
    // Fermionic part (denominator of the formula: inverted unless spec.inverse).
    if (spec.ramond) {
      for (const Weight& eta : d.delta_half_pos_options[spec.choice]) {
        apply(Rat(1), t1, wscale(Rat(-1), eta), !spec.inverse);
        apply(Rat(1), t2, eta, !spec.inverse);
      }
      if (d.eps_R == 1) apply(Rat(1), t1, wzero(d.dim), !spec.inverse);
    } else {
      Rat th = t1 + rat(1, 2);
      for (const Weight& mu : d.delta_half_bar) apply(Rat(1), th, mu, !spec.inverse);
      if (d.eps_R == 1) apply(Rat(1), th, wzero(d.dim), !spec.inverse);
    }
  }
  return s.window(window);
}

}  // namespace

QSeries denominator_R(const AlgebraData& d, std::size_t choice, const Rat& order,
                      long window) {
  return build_denominator(d, {true, false, choice}, order, window);
}

QSeries denominator_NS(const AlgebraData& d, const Rat& order, long window) {
  return build_denominator(d, {false, false, 0}, order, window);
}

QSeries inv_denominator_R(const AlgebraData& d, std::size_t choice, const Rat& order,
                          long window) {
  return build_denominator(d, {true, true, choice}, order, window);
}

QSeries inv_denominator_NS(const AlgebraData& d, const Rat& order, long window) {
  return build_denominator(d, {false, true, 0}, order, window);
}

QSeries char_verma_R(const AlgebraData& d, const Rat& k, const Weight& nu,
                     const Rat& ell, std::size_t choice, const Rat& order,
                     long window) {
  require_dominant(d, k, nu, "char_verma_R");
  Encoder enc = coroot_encoder(d);
  QSeries s = inv_denominator_R(d, choice, order, window);
  return s.mul_term(Rat(1), ell, enc.map(nu));
}

}  // namespace wmin
