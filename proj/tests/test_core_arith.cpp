#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wmin/qseries.hpp"

#include <random>

using namespace wmin;

namespace {

Laurent rand_laurent(std::mt19937& rng, int arity, int nterms, long span) {
  std::uniform_int_distribution<long> ed(-span, span);
  std::uniform_int_distribution<long> cd(-9, 9);
  Laurent p(arity);
  for (int i = 0; i < nterms; ++i) {
    ExpVec e(arity);
    for (auto& x : e) x = ed(rng);
    p.add_term(e, rat(cd(rng), 1 + (i % 3)));
  }
  return p;
}

// Product form of the Euler function phi(q) = prod (1 - q^n), truncated.
QSeries euler_phi(const Rat& order) {
  QSeries s = QSeries::one(0, 1, order);
  for (long n = 1; Rat(n) < order; ++n) s.mul_factor(rat(-1), Rat(n), {});
  return s;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-3/4") == rat(-3, 4));
  CHECK(parse_rat("-12") == rat(-12));
  CHECK(parse_rat("6/4") == rat(3, 2));
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK(rat_str(rat(8, 2)) == "4");
  CHECK_THROWS(parse_rat(""));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("1/-2"));
  CHECK_THROWS(parse_rat("a/2"));
  CHECK(rat_floor(rat(-3, 2)) == -2);
  CHECK(rat_ceil(rat(-3, 2)) == -1);
  CHECK(isqrt_ceil(rat(17)) == 5);
  CHECK(isqrt_ceil(rat(16)) == 4);
}

TEST_CASE("laurent ring operations") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Laurent a = rand_laurent(rng, 2, 4, 3);
    Laurent b = rand_laurent(rng, 2, 4, 3);
    Laurent c = rand_laurent(rng, 2, 4, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(a * Laurent::constant(2, rat(1)) == a);
  }
}

TEST_CASE("laurent exact binomial division") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Laurent p = rand_laurent(rng, 2, 5, 4);
    ExpVec m = {trial % 2 ? 1 : -2, trial % 3 - 1};
    if (expvec_is_zero(m)) m[0] = 1;
    Rat c = rat((trial % 5) - 2);
    if (c == 0) c = rat(1);
    Laurent fac(2);
    fac.add_term(ExpVec{0, 0}, rat(1));
    fac.add_term(m, c);
    Laurent prod = p * fac;
    CHECK(prod.divide_exact_binomial(m, c) == p);
  }
  // Non-divisible input must throw.
  Laurent one = Laurent::constant(1, rat(1));
  CHECK_THROWS(one.divide_exact_binomial(ExpVec{1}, rat(-1)));
}

TEST_CASE("euler product matches pentagonal number theorem") {
  QSeries s = euler_phi(rat(13));
  QSeries expect = QSeries::zero(0, 1, rat(0), rat(13));
  // 1 - q - q^2 + q^5 + q^7 - q^12 ...
  expect.add_at(rat(0), Laurent::constant(0, rat(1)));
  expect.add_at(rat(1), Laurent::constant(0, rat(-1)));
  expect.add_at(rat(2), Laurent::constant(0, rat(-1)));
  expect.add_at(rat(5), Laurent::constant(0, rat(1)));
  expect.add_at(rat(7), Laurent::constant(0, rat(1)));
  expect.add_at(rat(12), Laurent::constant(0, rat(-1)));
  CHECK(s.equal_on_common_range(expect));
}

TEST_CASE("series addition aligns offsets and grids") {
  QSeries a = QSeries::zero(1, 2, rat(-1, 2), rat(3));
  a.add_at(rat(-1, 2), Laurent::monomial(1, {1}, rat(2)));
  a.add_at(rat(1), Laurent::monomial(1, {0}, rat(5)));
  QSeries b = QSeries::zero(1, 3, rat(0), rat(2));
  b.add_at(rat(1, 3), Laurent::monomial(1, {-1}, rat(7)));
  QSeries s = a + b;
  CHECK(s.denom_lcm() == 6);
  CHECK(s.offset() == rat(-1, 2));
  CHECK(s.order() == rat(2));  // min of the two upper bounds
  CHECK(s.coeff(rat(-1, 2)) == Laurent::monomial(1, {1}, rat(2)));
  CHECK(s.coeff(rat(1, 3)) == Laurent::monomial(1, {-1}, rat(7)));
  CHECK(s.coeff(rat(1)) == Laurent::monomial(1, {0}, rat(5)));
}

TEST_CASE("series multiplication truncates to the weaker factor") {
  QSeries a = QSeries::one(0, 1, rat(10));
  a.add_at(rat(1), Laurent::constant(0, rat(1)));
  QSeries b = QSeries::one(0, 1, rat(3));
  QSeries p = a * b;
  CHECK(p.order() == rat(3));
  CHECK(p.coeff(rat(1)) == Laurent::constant(0, rat(1)));
}

TEST_CASE("series inverse round trip") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    QSeries a = QSeries::zero(2, 2, rat(trial - 3, 2), rat(trial - 3, 2) + rat(6));
    // unit leading term
    ExpVec lead = {static_cast<long>(trial % 3 - 1), 1};
    a.add_at(a.offset(), Laurent::monomial(2, lead, rat(trial % 4 + 1, 3)));
    for (int j = 1; j < 12; ++j) {
      Rat e = a.offset() + rat(j, 2);
      if (e >= a.order()) break;
      a.add_at(e, rand_laurent(rng, 2, 2, 2));
    }
    QSeries inv = a.inverse();
    QSeries prod = a * inv;
    QSeries one = QSeries::one(2, 2, prod.order());
    CHECK(prod.equal_on_common_range(one));
  }
  // Non-unit leading coefficient is rejected.
  QSeries bad = QSeries::zero(1, 1, rat(0), rat(4));
  Laurent l(1);
  l.add_term({0}, rat(1));
  l.add_term({1}, rat(1));
  bad.add_at(rat(0), l);
  CHECK_THROWS(bad.inverse());
}

TEST_CASE("geometric expansions of inverse factors") {
  // 1/(1 - a q^t e^b) = sum a^n q^{nt} e^{nb}
  QSeries g1 = expand_inverse_factor(1, 1, rat(-2), rat(1), {1}, rat(4));
  CHECK(g1.coeff(rat(0)) == Laurent::constant(1, rat(1)));
  CHECK(g1.coeff(rat(2)) == Laurent::monomial(1, {2}, rat(4)));
  CHECK(g1.coeff(rat(3)) == Laurent::monomial(1, {3}, rat(8)));

  // Negative q-shift: 1/(1 - a q^{-1} e^b) = -(q e^{-b}/a) sum a^{-n} q^n e^{-nb}
  QSeries g2 = expand_inverse_factor(1, 1, rat(-2), rat(-1), {1}, rat(4));
  CHECK(g2.offset() == rat(1));
  CHECK(g2.coeff(rat(1)) == Laurent::monomial(1, {-1}, rat(-1, 2)));
  CHECK(g2.coeff(rat(2)) == Laurent::monomial(1, {-2}, rat(-1, 4)));
  // check the product really is 1
  QSeries f = QSeries::one(1, 1, rat(4));
  f.add_at(rat(-1) + rat(1), Laurent::monomial(1, {0}, rat(0)));  // keep grid
  QSeries fac = QSeries::zero(1, 1, rat(-1), rat(3));
  fac.add_at(rat(-1), Laurent::monomial(1, {1}, rat(-2)));
  fac.add_at(rat(0), Laurent::constant(1, rat(1)));
  QSeries prod = fac * g2;
  CHECK(prod.equal_on_common_range(QSeries::one(1, 1, prod.order())));

  // Trivial scalar case 1/(1+0) handled upstream: s = 0 gives 1.
  QSeries g3 = expand_inverse_factor(1, 1, rat(0), rat(1), {1}, rat(3));
  CHECK(g3.equal_on_common_range(QSeries::one(1, 1, rat(3))));
}

TEST_CASE("sparse factor multiply and divide round trip") {
  std::mt19937 rng(99);
  QSeries s = QSeries::zero(2, 2, rat(0), rat(5));
  for (int j = 0; j < 10; ++j) s.add_at(rat(j, 2), rand_laurent(rng, 2, 3, 2));
  QSeries orig = s;
  s.mul_factor(rat(3), rat(1, 2), {1, -1});
  CHECK(!s.equal_on_common_range(orig));
  s.div_factor(rat(3), rat(1, 2), {1, -1});
  CHECK(s.equal_on_common_range(orig));

  // q^0 binomial division round trip.
  Laurent fac(2);
  fac.add_term({0, 0}, rat(1));
  fac.add_term({2, 0}, rat(5));
  QSeries t = orig;
  QSeries mul = t;
  QSeries q0 = QSeries::zero(2, 1, rat(0), rat(5));
  q0.add_at(rat(0), fac);
  mul = mul * q0;
  mul.div_factor(rat(5), rat(0), {2, 0});
  CHECK(mul.equal_on_common_range(orig));
}

TEST_CASE("variable q-shift substitution") {
  // s = z q + z^{-1} q  ->  (z -> z q^{1/2})  ->  z q^{3/2} + z^{-1} q^{1/2}
  QSeries s = QSeries::zero(1, 1, rat(0), rat(3));
  s.add_at(rat(1), Laurent::monomial(1, {1}, rat(1)));
  s.add_at(rat(1), Laurent::monomial(1, {-1}, rat(1)));
  QSeries t = s.shift_var(0, rat(1, 2));
  CHECK(t.coeff(rat(3, 2)) == Laurent::monomial(1, {1}, rat(1)));
  CHECK(t.coeff(rat(1, 2)) == Laurent::monomial(1, {-1}, rat(1)));
}

TEST_CASE("canonical json serialization") {
  QSeries s = QSeries::zero(2, 2, rat(-1, 2), rat(1));
  Laurent l(2);
  l.add_term({1, 0}, rat(1, 3));
  l.add_term({-1, 2}, rat(-2));
  s.add_at(rat(-1, 2), l);
  s.add_at(rat(0), Laurent::constant(2, rat(7)));
  CHECK(s.to_json() ==
        R"({"offset":"-1/2","denom_lcm":2,"order":"1","terms":[)"
        R"({"q_num":"-1","q_den":"2","monomials":[{"exps":[-1,2],"num":"-2","den":"1"},)"
        R"({"exps":[1,0],"num":"1","den":"3"}]},)"
        R"({"q_num":"0","q_den":"1","monomials":[{"exps":[0,0],"num":"7","den":"1"}]}]})");
}
