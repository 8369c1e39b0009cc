#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmin/weights.hpp"

#include <random>
#include <set>

using namespace wmin;

namespace {

AffineWeight aff(const Rat& a0, const Rat& dc, Weight fin) { return {a0, dc, std::move(fin)}; }

Weight rand_lattice(std::mt19937& rng, const AlgebraData& d, long span) {
  std::uniform_int_distribution<long> dist(-span, span);
  Weight w = wzero(d.dim);
  for (const auto& v : d.mnat_basis) w = wadd(w, wscale(Rat(dist(rng)), v));
  return w;
}

Weight rand_weight(std::mt19937& rng, const AlgebraData& d) {
  std::uniform_int_distribution<long> num(-6, 6);
  Weight w = wzero(d.dim);
  for (int i = 0; i < d.dim; ++i) w[i] = rat(num(rng), 2);
  return w;
}

}  // namespace

TEST_CASE("affine form extension") {
  AlgebraData d = lookup("psl22");
  AffineWeight L0 = aff(Rat(1), Rat(0), wzero(4));
  AffineWeight del = aff(Rat(0), Rat(1), wzero(4));
  AffineWeight th = aff(Rat(0), Rat(0), d.theta);
  CHECK(aform(d, L0, del) == 1);
  CHECK(aform(d, L0, L0) == 0);
  CHECK(aform(d, del, del) == 0);
  CHECK(aform(d, th, th) == 2);
  CHECK(aform(d, th, L0) == 0);
  AffineWeight z = aff(Rat(0), Rat(0), wzero(4));
  CHECK(aform(d, th, z) == 0);
}

TEST_CASE("pairings with x and D") {
  for (const auto& id : {"psl22", "spo(2|5)", "f4", "g3", "D(2,1;1/2)"}) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    AffineWeight th = aff(Rat(0), Rat(0), d.theta);
    CHECK(pairing_x(d, th) == 1);
    AffineWeight md = aff(Rat(0), rat(7, 3), wzero(d.dim));
    CHECK(pairing_xD(d, md) == rat(7, 3));
    // h^natural weights are orthogonal to theta
    AffineWeight rn = aff(Rat(0), Rat(0), d.rho_nat);
    CHECK(pairing_x(d, rn) == 0);
  }
}

TEST_CASE("evaluation map") {
  AlgebraData d = lookup("psl22");
  // Lambda_0 -> (0, 0)
  EvWeight e0 = ev(d, aff(Rat(1), Rat(0), wzero(4)));
  CHECK(e0.qexp == 0);
  CHECK(wis_zero(e0.fin));
  // k Lambda_0 + m delta + lam -> qexp = -m - lam(x)
  AffineWeight L = aff(rat(-2), rat(5, 2), d.theta);
  CHECK(ev(d, L).qexp == rat(-5, 2) - 1);
  // nu_hat_s at s=1/2, nu=0: qexp=-1/2, fin=rho_R
  Weight nu = wzero(4);
  AffineWeight nuh = aff(rat(-2), Rat(0),
                         wadd(wadd(nu, wscale(rat(1, 2), d.theta)), d.rho_R_options[0]));
  EvWeight e = ev(d, nuh);
  CHECK(e.qexp == rat(-1, 2));
  CHECK(e.fin == d.rho_R_options[0]);
}

TEST_CASE("simple reflections and Weyl group enumeration") {
  std::mt19937 rng(31337);
  const std::vector<std::pair<std::string, std::size_t>> orders = {
      {"psl22", 2},    {"spo(2|3)", 2}, {"spo(2|4)", 4}, {"spo(2|5)", 8},
      {"spo(2|7)", 48}, {"D(2,1;1/2)", 4}, {"f4", 48},   {"g3", 12}};
  for (const auto& [id, expect] : orders) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    const auto& W = weyl_group(d);
    CHECK(W.size() == expect);
    // s_alpha(alpha) = -alpha; involution
    for (int i = 0; i < static_cast<int>(d.simple_nat.size()); ++i) {
      CHECK(reflect_simple(d, i, d.simple_nat[i]) == wscale(Rat(-1), d.simple_nat[i]));
      Weight w = rand_weight(rng, d);
      CHECK(reflect_simple(d, i, reflect_simple(d, i, w)) == w);
    }
    for (const auto& e : W) {
      CHECK(e.det == ((e.word.size() % 2) ? -1 : 1));
      Weight w = rand_weight(rng, d);
      CHECK(weyl_act(d, e.word, w) == apply_action(e.action, w));
      // form invariance
      Weight v = rand_weight(rng, d);
      CHECK(d.form(apply_action(e.action, w), apply_action(e.action, v)) == d.form(w, v));
    }
  }
}

TEST_CASE("G2 orbit of rho_nat has 12 distinct elements") {
  AlgebraData d = lookup("g3");
  std::set<Weight> orbit;
  for (const auto& e : weyl_group(d)) orbit.insert(apply_action(e.action, d.rho_nat));
  CHECK(orbit.size() == 12);
}

TEST_CASE("lattice membership") {
  AlgebraData d = lookup("spo(2|5)");
  Weight e1 = wzero(d.dim);
  e1[1] = 1;
  CHECK_THROWS(mnat_coords(d, e1));  // odd coordinate sum
  Weight v = wadd(wscale(Rat(2), d.mnat_basis[0]), wscale(Rat(-3), d.mnat_basis[1]));
  auto c = mnat_coords(d, v);
  CHECK(c[0] == 2);
  CHECK(c[1] == -3);
  Weight off = v;
  off[1] += rat(1, 2);
  CHECK_THROWS(mnat_coords(d, off));
}

TEST_CASE("translations: identity, group law, level") {
  std::mt19937 rng(9090);
  for (const auto& id : {"psl22", "spo(2|3)", "spo(2|4)", "spo(2|6)", "spo(2|7)",
                         "D(2,1;2/3)", "f4", "g3"}) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    for (int trial = 0; trial < 50; ++trial) {
      AffineWeight lam = aff(rat(trial % 7 - 3), rat(trial % 5 - 2, 2), rand_weight(rng, d));
      Weight a = rand_lattice(rng, d, 3);
      Weight b = rand_lattice(rng, d, 3);
      CHECK(translate(d, wzero(d.dim), lam).fin == lam.fin);
      CHECK(translate(d, wzero(d.dim), lam).dcoef == lam.dcoef);
      AffineWeight t1 = translate(d, a, translate(d, b, lam));
      AffineWeight t2 = translate(d, wadd(a, b), lam);
      CHECK(t1.a0 == t2.a0);
      CHECK(t1.dcoef == t2.dcoef);
      CHECK(t1.fin == t2.fin);
      CHECK(t1.a0 == lam.a0);  // level preserved
    }
  }
}

TEST_CASE("ev composed with translate matches the unwound closed form") {
  std::mt19937 rng(2718);
  for (const auto& id : {"psl22", "spo(2|5)", "f4", "g3"}) {
    AlgebraData d = lookup(id);
    const Rat v = d.ideals[0].u;
    CAPTURE(id);
    for (int trial = 0; trial < 30; ++trial) {
      AffineWeight lam = aff(rat(trial % 5 - 2), rat(trial % 3, 2), rand_weight(rng, d));
      Weight a = rand_lattice(rng, d, 3);
      EvWeight got = ev(d, translate(d, a, lam));
      // q-exponent: -lam(x+D) + (2/v)((lam|a) + (a|a) lam(K)/v);  the finite
      // part gains (2/v) lam(K) a (a is already in h^natural).
      Rat qexp = -pairing_xD(d, lam) +
                 (2 / v) * (d.form(lam.fin, a) + d.form(a, a) * lam.a0 / v);
      CHECK(got.qexp == qexp);
      CHECK(got.fin == wadd(d.restrict_hnat(lam.fin), wscale(2 * lam.a0 / v, a)));
    }
  }
}

TEST_CASE("fundamental weights are dual to simple coroots") {
  for (const auto& id : list_algebras()) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    auto om = fundamental_weights(d);
    for (std::size_t i = 0; i < om.size(); ++i)
      for (std::size_t j = 0; j < d.simple_nat.size(); ++j)
        CHECK(d.pair_covee(om[i], d.simple_nat[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("exact lattice enumeration inside an ellipsoid") {
  // Z^2 with Q = x^2 + xy + y^2 + x - 1/2, compared against brute force.
  std::vector<Weight> basis = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  auto Q = [](const Weight& w) -> Rat {
    return w[0] * w[0] + w[0] * w[1] + w[1] * w[1] + w[0] - rat(1, 2);
  };
  Rat bound = rat(23, 2);
  auto got = enumerate_lattice_leq(basis, Q, bound);
  std::set<std::vector<Rat>> gotset(got.begin(), got.end());
  std::size_t expect = 0;
  for (long x = -20; x <= 20; ++x)
    for (long y = -20; y <= 20; ++y) {
      Weight w = {Rat(x), Rat(y)};
      if (Q(w) <= bound) {
        ++expect;
        CHECK(gotset.count(w) == 1);
      }
    }
  CHECK(gotset.size() == expect);

  // Indefinite quadratic is rejected.
  auto bad = [](const Weight& w) -> Rat { return w[0] * w[0] - w[1] * w[1]; };
  CHECK_THROWS(enumerate_lattice_leq(basis, bad, Rat(3)));
  // Non-quadratic function is rejected.
  auto cubic = [](const Weight& w) -> Rat { return w[0] * w[0] * w[0] + w[1] * w[1]; };
  CHECK_THROWS(enumerate_lattice_leq(basis, cubic, Rat(3)));
}

TEST_CASE("translation quadratic q-exponent is enumerable") {
  // The q-exponent of ev(t_alpha(k0 Lambda_0 + rho_hat-style weights)) as a
  // function of alpha is quadratic positive definite below the critical level;
  // enumerate_lattice_leq must accept it for every algebra with a collapse level.
  for (const auto& id : {"psl22", "spo(2|4)", "spo(2|7)", "f4", "g3"}) {
    AlgebraData d = lookup(id);
    CAPTURE(id);
    AffineWeight lam = {d.k0 + d.h_dual, Rat(0), rho_g(d)};
    auto Q = [&](const Weight& a) -> Rat { return ev(d, translate(d, a, lam)).qexp; };
    auto pts = enumerate_lattice_leq(d.mnat_basis, Q, Rat(6));
    CHECK(!pts.empty());
    for (const auto& a : pts) CHECK(Q(a) <= 6);
  }
}
