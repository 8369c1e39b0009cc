#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmin/unitarity.hpp"

#include <random>

using namespace wmin;

namespace {

Weight spo_nu(const AlgebraData& d, const std::vector<long>& twice_m) {
  Weight nu = wzero(d.dim);
  for (std::size_t i = 0; i < twice_m.size(); ++i) nu[1 + i] = rat(twice_m[i], 2);
  return nu;
}

}  // namespace

TEST_CASE("membership in P^+_k") {
  AlgebraData d = lookup("psl22");
  CHECK(in_Pk_plus(d, rat(-3), wzero(4)));
  CHECK(in_Pk_plus(d, rat(-3), d.ideals[0].theta_i));  // nu = theta_1, M = 2
  CHECK_FALSE(in_Pk_plus(d, rat(-3), wscale(rat(3, 2), d.ideals[0].theta_i)));
  CHECK_FALSE(in_Pk_plus(d, rat(-3), wscale(rat(1, 3), d.ideals[0].theta_i)));  // not integral
  CHECK_FALSE(in_Pk_plus(d, rat(-3), d.theta));  // not supported on h^natural

  AlgebraData s6 = lookup("spo(2|6)");
  Rat k = rat(-3, 2);  // M_1 = 2
  CHECK(in_Pk_plus(s6, k, spo_nu(s6, {2, 2, 2})));   // m_1 + m_2 = 2 <= 2
  CHECK_FALSE(in_Pk_plus(s6, k, spo_nu(s6, {4, 2, 0})));
  CHECK(in_Pk_plus(s6, k, spo_nu(s6, {1, 1, -1})));  // half-integer series, m_2 >= |m_3|
  CHECK_FALSE(in_Pk_plus(s6, k, spo_nu(s6, {1, 1, -2})));
  CHECK_FALSE(in_Pk_plus(s6, k, spo_nu(s6, {2, 1, 0})));  // mixed parity
}

TEST_CASE("level admissibility") {
  CHECK(level_admissible(lookup("psl22"), rat(-3)));
  CHECK_FALSE(level_admissible(lookup("psl22"), rat(-5, 2)));
  CHECK_FALSE(level_admissible(lookup("psl22"), rat(0)));  // M = -1 < 0
  CHECK(level_admissible(lookup("g3"), rat(-9, 4)));
  CHECK_FALSE(level_admissible(lookup("g3"), rat(-2)));
  // both ideals must be admissible for D(2,1;m/n)
  AlgebraData d21 = lookup("D(2,1;1/2)");
  CHECK(level_admissible(d21, rat(-2)));       // M_1 = 2, M_2 = 5
  CHECK_FALSE(level_admissible(d21, rat(-1)));  // M_1 = 1/2
}

TEST_CASE("c_gamma_eta cases") {
  AlgebraData d = lookup("spo(2|5)");
  Weight e1 = spo_nu(d, {2, 0}), e2 = spo_nu(d, {0, 2});
  Weight zero = wzero(d.dim);
  // eta = 0: short roots give -1/2, long roots give 0
  CHECK(c_gamma_eta(d, e1, zero) == rat(-1, 2));
  CHECK(c_gamma_eta(d, wadd(e1, e2), zero) == 0);
  CHECK(c_gamma_eta(d, wsub(e1, e2), zero) == 0);
  // eta != 0: (gamma|eta) if <= 0, else 0.  (e1-e2|e2) = 1/2 > 0
  CHECK(c_gamma_eta(d, wsub(e1, e2), e2) == 0);
  CHECK(c_gamma_eta(d, wadd(e1, e2), e2) == rat(-1, 2));
  CHECK(c_gamma_eta(d, e1, e2) == 0);
  CHECK_THROWS(c_gamma_eta(d, wscale(Rat(2), e1), zero));       // not a root
  CHECK_THROWS(c_gamma_eta(d, e1, wscale(Rat(2), e2)));         // not a half-weight
  CHECK_THROWS(c_gamma_eta(lookup("psl22"), lookup("psl22").ideals[0].theta_i, wzero(4)));
}

TEST_CASE("F_of on psl(2|2)") {
  AlgebraData d = lookup("psl22");
  Weight eta = d.delta_half_pos_options[0][0];  // representative of xi on h*
  for (long r = 0; r <= 5; ++r) {
    Weight nu = wscale(rat(r, 2), d.ideals[0].theta_i);
    CHECK(F_of(d, nu, eta) == rat(r * r, 2) + r);
  }
  for (const auto& e : d.delta_half_bar) CHECK(F_of(d, wzero(4), e) == 0);
  CHECK_THROWS(F_of(d, wzero(4), wzero(4)));  // theta/2 is not a root here
}

TEST_CASE("psl(2|2) closed forms") {
  AlgebraData d = lookup("psl22");
  for (long kn : {-2, -3, -4, -5}) {
    Rat k(kn);
    for (long r = 0; r <= d.M_of(0, k); ++r) {
      Weight nu = wscale(rat(r, 2), d.ideals[0].theta_i);
      CAPTURE(kn);
      CAPTURE(r);
      CHECK(A_bound(d, k, nu) == -(k + 1) / 4);
      CHECK(B_bound(d, k, nu, 0) == -(k * k + k + r * r) / (4 * k));
      CHECK(ramond_extremal(d, k, nu, 0) == (r == 0));
    }
  }
}

TEST_CASE("spo(2|3) closed forms") {
  AlgebraData d = lookup("spo(2|3)");
  for (const Rat& k : {rat(-3, 4), rat(-1), rat(-5, 4), rat(-3, 2)}) {
    Rat M = d.M_of(0, k);
    for (long r = 0; r <= M; ++r) {
      Weight nu = wscale(rat(r, 2), d.ideals[0].theta_i);
      Rat want = -(8 * k * k + 10 * k + 2 * r * r + 3) / (32 * k + 16);
      CAPTURE(rat_str(k));
      CAPTURE(r);
      CHECK(A_bound(d, k, nu) == want);
      CHECK(B_bound(d, k, nu, 0) == want);
      // the same bound written in terms of M_1(k)
      CHECK(A_bound(d, k, nu) == (M - 1) / 16 + rat(r * r) / (4 * M));
      CHECK(ramond_extremal(d, k, nu, 0) == (r == 0 || Rat(r) == M));
    }
  }
  // anchors at k = -3/4
  CHECK(A_bound(d, rat(-3, 4), wzero(d.dim)) == 0);
  CHECK(A_bound(d, rat(-3, 4), wscale(rat(1, 2), d.ideals[0].theta_i)) == rat(1, 4));
}

TEST_CASE("spo(2|2r) closed forms, r = 3, 4") {
  for (long r : {3L, 4L}) {
    AlgebraData d = lookup("spo(2|" + std::to_string(2 * r) + ")");
    for (const Rat& k : {rat(-1), rat(-3, 2), rat(-2)}) {
      Rat M = d.M_of(0, k);
      Rat h = k + d.h_dual;
      for (long t1 = 0; t1 <= 2 * M && t1 <= 6; ++t1)
        for (long t2 = t1 % 2; t2 <= t1; t2 += 2)
          for (long t3 = (r > 3 ? 0 : -t2) + ((r > 3 ? 0 : -t2) % 2 + t1 % 2 + 2) % 2;
               t3 <= t2; t3 += 2) {
            std::vector<long> tw(r, 0);
            tw[0] = t1, tw[1] = t2, tw[2] = t3;
            Weight nu = spo_nu(d, tw);
            if (!in_Pk_plus(d, k, nu)) continue;
            CAPTURE(r);
            CAPTURE(rat_str(k));
            CAPTURE(t1);
            CAPTURE(t2);
            CAPTURE(t3);
            Rat sA(0), sB0(0), sB1(0);
            for (long i = 1; i <= r; ++i) {
              long c = 2 * (r - i) - 1;
              Rat lin = rat(tw[i - 1], 2), sq = rat(tw[i - 1] * tw[i - 1], 4);
              if (i < r) sA += c * lin + sq;
              sB0 += c * lin + sq;
              sB1 += (c < 0 ? -c : c) * lin + sq;
            }
            CHECK(A_bound(d, k, nu) == -(sA + d.p_of(k)) / (4 * h));
            // the published bracket omits the constant 1/4 that the definition
            // of B forces; the corrected forms satisfy A = B + (..|eta)^2/h
            CHECK(B_bound(d, k, nu, 0) == -(sB0 + d.p_of(k) + rat(1, 4)) / (4 * h));
            CHECK(B_bound(d, k, nu, 1) == -(sB1 + d.p_of(k) + rat(1, 4)) / (4 * h));
            CHECK(ramond_extremal(d, k, nu, 0) == (tw[r - 1] == -tw[r - 2]));
            CHECK(ramond_extremal(d, k, nu, 1) == (tw[r - 1] == tw[r - 2]));
            // min over eta of F equals (1/2)(m_r^2 + sum_{i<r} m_i)
            Rat mf = rat(tw[r - 1] * tw[r - 1], 8);
            for (long i = 1; i < r; ++i) mf += rat(tw[i - 1], 4);
            CHECK(min_F(d, nu).first == mf);
          }
    }
  }
}

TEST_CASE("spo(2|2r+1) closed forms, r = 2, 3") {
  for (long r : {2L, 3L}) {
    AlgebraData d = lookup("spo(2|" + std::to_string(2 * r + 1) + ")");
    for (const Rat& k : {rat(-1), rat(-3, 2), rat(-2)}) {
      Rat M = d.M_of(0, k);
      Rat h = k + d.h_dual;
      for (long t1 = 0; t1 <= 2 * M && t1 <= 6; ++t1)
        for (long t2 = t1 % 2; t2 <= t1; t2 += 2)
          for (long t3 = t2 % 2; t3 <= (r > 2 ? t2 : t2 % 2 == 0 ? 0 : -1); t3 += 2) {
            std::vector<long> tw(r, 0);
            tw[0] = t1, tw[1] = t2;
            if (r > 2) tw[2] = t3;
            Weight nu = spo_nu(d, tw);
            if (!in_Pk_plus(d, k, nu)) continue;
            CAPTURE(r);
            CAPTURE(rat_str(k));
            CAPTURE(t1);
            CAPTURE(t2);
            // the published display carries a misprinted linear coefficient;
            // 2(r-i) is forced by A = B (theta/2 a root) and the definition of B
            Rat sA(0);
            for (long i = 1; i <= r; ++i)
              sA += (2 * (r - i)) * rat(tw[i - 1], 2) + rat(tw[i - 1] * tw[i - 1], 4);
            CHECK(A_bound(d, k, nu) == -(sA + d.p_of(k)) / (4 * h));
            CHECK(A_bound(d, k, nu) == B_bound(d, k, nu, 0));
            CHECK(ramond_extremal(d, k, nu, 0) == (tw[r - 1] == 0));
          }
    }
  }
}

TEST_CASE("D(2,1;m/n) closed forms") {
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}}) {
    AlgebraData d = lookup("D(2,1;" + std::to_string(m) + "/" + std::to_string(n) + ")");
    std::vector<Rat> ks = (m == 1) ? std::vector<Rat>{rat(-2, 3), rat(-4, 3), rat(-2)}
                                   : std::vector<Rat>{rat(-6, 5), rat(-12, 5), rat(-18, 5)};
    for (const Rat& k : ks) {
      Rat M1 = d.M_of(0, k), M2 = d.M_of(1, k);
      for (long r1 = 0; r1 <= M1; ++r1)
        for (long r2 = 0; r2 <= M2; ++r2) {
          Weight nu = wadd(wscale(rat(r1, 2), d.ideals[0].theta_i),
                           wscale(rat(r2, 2), d.ideals[1].theta_i));
          CAPTURE(m);
          CAPTURE(rat_str(k));
          CAPTURE(r1);
          CAPTURE(r2);
          Rat S(r1 + r2);
          CHECK(A_bound(d, k, nu) ==
                -(rat(m * n, (m + n) * (m + n)) * (S * S + 2 * S) + d.p_of(k)) / (4 * k));
          // the published displays carry a sign misprint on the fraction (as
          // printed they would place the sufficient bound strictly below the
          // necessary one); the corrected sign satisfies A = B + (..)^2/k
          CHECK(B_bound(d, k, nu, 0) ==
                -(k + 1) / 4 - Rat(m * (r2 + 1) * (r2 + 1) + n * r1 * r1) / (4 * (m + n) * k));
          CHECK(B_bound(d, k, nu, 1) ==
                -(k + 1) / 4 - Rat(m * r2 * r2 + n * (r1 + 1) * (r1 + 1)) / (4 * (m + n) * k));
          CHECK(ramond_extremal(d, k, nu, 0) == (r1 == 0 || Rat(r2) == M2));
          CHECK(ramond_extremal(d, k, nu, 1) == (Rat(r1) == M1 || r2 == 0));
          CHECK(A_bound(d, k, nu) <= B_bound(d, k, nu, 0));
        }
    }
  }
}

TEST_CASE("F(4) closed forms") {
  AlgebraData d = lookup("f4");
  for (const Rat& k : {rat(-2), rat(-8, 3), rat(-10, 3)}) {
    Rat M = d.M_of(0, k);
    for (long t1 = 0; t1 <= 2 * M && t1 <= 8; ++t1)
      for (long t2 = t1 % 2; t2 <= t1; t2 += 2)
        for (long t3 = t2 % 2; t3 <= t2; t3 += 2) {
          Weight nu = spo_nu(d, {t1, t2, t3});
          if (!in_Pk_plus(d, k, nu)) continue;
          CAPTURE(rat_str(k));
          CAPTURE(t1);
          CAPTURE(t2);
          CAPTURE(t3);
          Rat r1 = rat(t1, 2), r2 = rat(t2, 2), r3 = rat(t3, 2);
          CHECK(A_bound(d, k, nu) ==
                -(rat(8, 9) * (r1 * r1 + r1 * (r2 + r3 + 5) + r2 * r2 - r2 * r3 + 4 * r2 +
                               r3 * r3 + r3) +
                  d.p_of(k)) /
                    (4 * (k - 2)));
          CHECK(B_bound(d, k, nu, 0) ==
                -(3 * k * k + 4 * r1 * r1 + 12 * r1 + 4 * r2 * r2 + 12 * r2 + 4 * r3 * r3 +
                  4 * r3 - 1) /
                    (12 * (k - 2)));
          CHECK(B_bound(d, k, nu, 1) ==
                -(3 * k * k + 4 * (r1 * r1 + 4 * r1 + r2 * r2 + 2 * r2 + r3 * r3)) /
                    (12 * (k - 2)));
          CHECK(ramond_extremal(d, k, nu, 0) == (t1 == t2));
          CHECK(ramond_extremal(d, k, nu, 1) == (t3 == 0));
          Rat mm = -r1 + r2 + r3;
          CHECK(min_F(d, nu).first == rat(2, 9) * (mm * mm + 5 * r1 + r2 + r3));
        }
  }
}

TEST_CASE("G(3) closed forms") {
  AlgebraData d = lookup("g3");
  for (const Rat& k : {rat(-3, 2), rat(-9, 4), rat(-3)}) {
    Rat M = d.M_of(0, k);
    for (long r1 = 0; Rat(r1) <= M; ++r1)
      for (long r2 = r1; r2 <= 2 * r1 && Rat(r2) <= M; ++r2) {
        Weight nu = spo_nu(d, {2 * r1, 2 * r2});
        REQUIRE(in_Pk_plus(d, k, nu));
        CAPTURE(rat_str(k));
        CAPTURE(r1);
        CAPTURE(r2);
        CHECK(A_bound(d, k, nu) == (8 * k * k + 2 * k + 8 * r1 * r1 - 8 * r1 * r2 +
                                    8 * r2 * r2 + 24 * r2 - 3) /
                                       (48 - 32 * k));
        CHECK(A_bound(d, k, nu) == B_bound(d, k, nu, 0));
        CHECK(ramond_extremal(d, k, nu, 0) == (2 * r1 == r2));
        Rat t(2 * r1 - r2);
        CHECK(min_F(d, nu).first == t * (t - 1) / 8 + rat(r1 + r2, 2));
      }
  }
  // k = -9/4 gives M_1 = 2 and exactly four dominant weights
  int count = 0;
  for (long r1 = 0; r1 <= 4; ++r1)
    for (long r2 = 0; r2 <= 4; ++r2)
      if (in_Pk_plus(d, rat(-9, 4), spo_nu(d, {2 * r1, 2 * r2}))) ++count;
  CHECK(count == 4);
}

TEST_CASE("ell(s), d(s), A/B relations and g0 norms across the catalog") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> num(-9, 9);
  for (const auto& id : list_algebras()) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    Rat k = d.family == Family::Spo2m && d.spo_m == 3 ? rat(-5, 4)
            : d.family == Family::Spo2m                ? rat(-5, 2)
            : d.family == Family::D21                  ? rat(-7, 3)
            : d.family == Family::F4                   ? rat(-8, 3)
            : d.family == Family::G3                   ? rat(-9, 4)
                                                       : rat(-7, 2);
    Rat h = k + d.h_dual;
    Rat eps = rat(d.eps_R, 1);
    Weight w1 = wzero(d.dim);
    for (const auto& idl : d.ideals) w1 = wadd(w1, idl.theta_i);
    for (const Weight& nu : {wzero(d.dim), w1, wscale(Rat(2), w1)}) {
      for (std::size_t ch = 0; ch < d.eta_min_options.size(); ++ch) {
        Rat A = A_bound(d, k, nu);
        Rat B = B_bound(d, k, nu, ch);
        const Weight& eta = eta_min(d, ch);
        Weight mu = wadd(wsub(nu, d.rho_R_options[ch]), d.rho_nat);
        if (d.eps_R == 1) {
          CHECK(A == B);
          CHECK(ell_of_s(d, k, nu, (2 * k + 1) / 4, ch) == A);
          CHECK(g0_norm(d, k, nu, A, wzero(d.dim)) == 0);
        } else {
          CHECK(A == B + d.form(mu, eta) * d.form(mu, eta) / h);
          CHECK(ell_of_s(d, k, nu, (k + 1) / 2 + d.form(mu, eta), ch) == A);
          CHECK(ell_of_s(d, k, nu, (k + 1) / 2 - d.form(mu, eta), ch) == A);
          Rat a1 = d.form(nu, eta);
          Rat a2 = d.form(wsub(d.rho_nat, d.rho_R_options[ch]), eta);
          // minimized F in closed form (with the -2(nu|rho_R) constant that the
          // surrounding derivations force)
          CHECK(F_of(d, nu, eta) ==
                2 * a1 * (a1 + 2 * a2) - 2 * d.form(nu, d.rho_R_options[ch]));
          CHECK(min_F(d, nu).first == F_of(d, nu, eta));
          CHECK(g0_norm(d, k, nu, A, min_F(d, nu).second) == 0);
        }
        for (int t = 0; t < 25; ++t) {
          Rat s = rat(num(rng), 1 + (t % 4));
          Rat dd = d_of_s(d, k, nu, s, ch);
          Rat v = s - ((k + 1) / 2 - eps / 4);
          CHECK(dd == v * v / h);
          CHECK(dd == ell_of_s(d, k, nu, s, ch) - B);
          CHECK(ell_of_s(d, k, nu, s, ch) == ell_of_s(d, k, nu, k + 1 - eps / 2 - s, ch));
        }
        CHECK(d_of_s(d, k, nu, (k + 1) / 2 - eps / 4, ch) == 0);
        CHECK(ell_of_s(d, k, nu, (k + 1) / 2 - eps / 4, ch) == B);
        for (const auto& e : d.delta_half_bar) {
          CHECK(g0_norm(d, k, nu, A, e) >= 0);
          CHECK(g0_norm(d, k, nu, A + 1, e) - g0_norm(d, k, nu, A, e) == -2 * h);
        }
      }
    }
  }
}

TEST_CASE("verdicts") {
  AlgebraData psl = lookup("psl22");
  // proved extremal N=4 case
  auto v = verdict(psl, rat(-2), wzero(4), rat(1, 4), Sector::Ramond, false, 0);
  CHECK(v.status == Status::Unitary);
  CHECK(v.A == rat(1, 4));
  CHECK(v.is_ramond_extremal);
  CHECK_FALSE(v.conjecture_assumed);
  // extremal with ell != A fails
  CHECK(verdict(psl, rat(-2), wzero(4), rat(1, 2), Sector::Ramond, false, 0).status ==
        Status::FailsNecessary);
  Weight half_theta1 = wscale(rat(1, 2), psl.ideals[0].theta_i);  // r = 1
  // ell below A fails
  CHECK(verdict(psl, rat(-2), half_theta1, rat(0), Sector::Ramond, false, 0).status ==
        Status::FailsNecessary);
  // non-extremal, ell >= B: unconditional
  CHECK(verdict(psl, rat(-2), half_theta1, rat(1), Sector::Ramond, false, 0).status ==
        Status::Unitary);
  // non-extremal, A <= ell < B: conditional (theta/2 not a root)
  {
    Weight nu = half_theta1;  // A = 1/4, B = 3/8 at k = -2
    CHECK(B_bound(psl, rat(-2), nu, 0) == rat(3, 8));
    auto c0 = verdict(psl, rat(-2), nu, rat(5, 16), Sector::Ramond, false, 0);
    CHECK(c0.status == Status::UnitaryConditionalOnConjecture);
    CHECK_FALSE(c0.conjecture_assumed);
    auto c1 = verdict(psl, rat(-2), nu, rat(5, 16), Sector::Ramond, true, 0);
    CHECK(c1.status == Status::UnitaryConditionalOnConjecture);
    CHECK(c1.conjecture_assumed);
  }
  // inadmissible level / non-dominant weight
  CHECK(verdict(psl, rat(-5, 2), wzero(4), rat(0), Sector::Ramond, false, 0).status ==
        Status::NotLevelAdmissible);
  CHECK(verdict(psl, rat(-3), wscale(rat(3, 2), psl.ideals[0].theta_i), rat(0),
                Sector::Ramond, false, 0)
            .status == Status::NotDominant);

  // spo(2|3): proved extremal family and exact boundary elsewhere
  AlgebraData s3 = lookup("spo(2|3)");
  Rat k3 = rat(-5, 4);  // M_1 = 3
  for (long r : {0L, 3L}) {
    Weight nu = wscale(rat(r, 2), s3.ideals[0].theta_i);
    Rat A = A_bound(s3, k3, nu);
    auto e = verdict(s3, k3, nu, A, Sector::Ramond, false, 0);
    CHECK(e.status == Status::Unitary);
    CHECK(e.is_ramond_extremal);
  }
  {
    Weight nu = wscale(rat(1, 2), s3.ideals[0].theta_i);  // non-extremal, A = B
    Rat A = A_bound(s3, k3, nu);
    CHECK(verdict(s3, k3, nu, A, Sector::Ramond, false, 0).status == Status::Unitary);
  }

  // G(3): theta/2 a root, so ell >= A suffices for non-extremal weights
  AlgebraData g3 = lookup("g3");
  Rat kg = rat(-9, 4);
  Weight nu_g = spo_nu(g3, {2, 4});  // r1=1, r2=2: extremal (2r1 = r2)
  Rat Ag = A_bound(g3, kg, nu_g);
  CHECK(verdict(g3, kg, nu_g, Ag, Sector::Ramond, false, 0).status ==
        Status::ExtremalBoundaryOpen);
  Weight nu_g2 = spo_nu(g3, {2, 2});  // non-extremal
  CHECK(verdict(g3, kg, nu_g2, A_bound(g3, kg, nu_g2), Sector::Ramond, false, 0).status ==
        Status::Unitary);

  // F(4): extremal boundary stays open; conditional band carries the flag
  AlgebraData f4 = lookup("f4");
  Rat kf = rat(-8, 3);  // M_1 = 3
  Weight nu_f = spo_nu(f4, {2, 2, 0});  // r1 = r2 -> extremal for choice 0
  CHECK(verdict(f4, kf, nu_f, A_bound(f4, kf, nu_f), Sector::Ramond, false, 0).status ==
        Status::ExtremalBoundaryOpen);
  Weight nu_f2 = spo_nu(f4, {4, 2, 2});  // non-extremal for choice 0
  {
    Rat A = A_bound(f4, kf, nu_f2), B = B_bound(f4, kf, nu_f2, 0);
    REQUIRE(A < B);
    auto c = verdict(f4, kf, nu_f2, (A + B) / 2, Sector::Ramond, true, 0);
    CHECK(c.status == Status::UnitaryConditionalOnConjecture);
    CHECK(c.conjecture_assumed);
  }

  // NS sector: bounds and extremality are reported, classification stays open
  auto ns = verdict(psl, rat(-2), wzero(4), rat(1, 4), Sector::NS, false, 0);
  CHECK(ns.status == Status::ExtremalBoundaryOpen);
  CHECK(ns.A == rat(1, 4));
}

TEST_CASE("massless predicate") {
  AlgebraData psl = lookup("psl22");
  CHECK(massless_predicate(psl, rat(-2), wzero(4), rat(1, 4), 0));
  CHECK_FALSE(massless_predicate(psl, rat(-2), wzero(4), rat(1, 2), 0));
  // theta/2 not a root: ell = A is enough, extremality not required
  CHECK(massless_predicate(psl, rat(-2), wscale(rat(1, 2), psl.ideals[0].theta_i),
                           rat(1, 4), 0));
  // theta/2 a root: extremality is required on top of ell = A
  AlgebraData g3 = lookup("g3");
  Weight nu = spo_nu(g3, {2, 2});  // non-extremal
  CHECK_FALSE(massless_predicate(g3, rat(-9, 4), nu, A_bound(g3, rat(-9, 4), nu), 0));
  Weight nu_e = spo_nu(g3, {2, 4});
  CHECK(massless_predicate(g3, rat(-9, 4), nu_e, A_bound(g3, rat(-9, 4), nu_e), 0));
}

TEST_CASE("error handling") {
  AlgebraData g3 = lookup("g3");
  CHECK_THROWS(A_bound(g3, g3.k_crit, wzero(3)));
  CHECK_THROWS(B_bound(g3, rat(3, 2), wzero(3), 0));
  CHECK_THROWS(B_bound(g3, rat(-2), wzero(3), 1));  // only one choice
  CHECK_THROWS(eta_min(g3, 1));
  CHECK_THROWS(g0_norm(lookup("psl22"), rat(-2), wzero(4), rat(0), wzero(4)));
  CHECK(status_str(Status::Unitary) == "Unitary");
  CHECK(status_str(Status::NotLevelAdmissible) == "NotLevelAdmissible");
}
