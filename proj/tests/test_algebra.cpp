#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mindist/errors.hpp"
#include "mindist/order.hpp"
#include "mindist/polynomial.hpp"
#include "fixtures.hpp"

using namespace mindist;

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.modulus() == 7);
  CHECK(f7.reduce(-1) == 6);
  CHECK(f7.reduce(15) == 1);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.neg(0) == 0);
  CHECK(f7.neg(3) == 4);
  CHECK(f7.mul(4, 5) == 6);
  CHECK(f7.pow(3, 0) == 1);
  CHECK(f7.pow(3, 6) == 1);  // Fermat
  for (long long a = 1; a < 7; ++a) {
    CHECK(f7.mul(a, f7.inv(a)) == 1);
  }
  CHECK_THROWS_AS(f7.inv(0), InputError);
}

TEST_CASE("prime field rejects non-prime and oversized moduli") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));  // 2^31 - 1
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK_THROWS_AS(PrimeField(10), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(-7), InputError);
  CHECK_THROWS_AS(PrimeField(2147483659LL), InputError);  // prime but >= 2^31
  CHECK_NOTHROW(PrimeField(2147483647));
}

TEST_CASE("monomial operations") {
  Monomial a({2, 0, 1});
  Monomial b({1, 0, 1});
  CHECK(a.degree() == 3);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.times(b) == Monomial({3, 0, 2}));
  CHECK(a.exact_quotient(b) == Monomial({1, 0, 0}));
  CHECK_THROWS_AS(b.exact_quotient(a), InputError);
  CHECK(a.colon_quotient(Monomial({0, 4, 1})) == Monomial({2, 0, 0}));
  CHECK(a.support() == std::vector<int>{0, 2});
  CHECK(Monomial({0, 0, 0}).is_unit());
  CHECK_FALSE(a.is_unit());
  CHECK(lcm(a, Monomial({0, 3, 0})) == Monomial({2, 3, 1}));
  CHECK(gcd(a, b) == b);
}

TEST_CASE("monomial orders") {
  Monomial x2y({2, 1, 0});  // t1^2*t2
  Monomial xy2({1, 2, 0});  // t1*t2^2
  SUBCASE("grevlex breaks degree ties on the rightmost difference") {
    CHECK(compare(grevlex_order(), x2y, xy2) > 0);
    CHECK(compare(grevlex_order(), xy2, x2y) < 0);
    // degree decides first
    CHECK(compare(grevlex_order(), Monomial({0, 0, 3}), Monomial({2, 0, 0})) > 0);
    CHECK(compare(grevlex_order(), x2y, x2y) == 0);
  }
  SUBCASE("lex ignores degree") {
    CHECK(compare(lex_order(), Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
    CHECK(compare(lex_order(), x2y, xy2) > 0);
  }
  SUBCASE("grlex breaks degree ties leftmost") {
    CHECK(compare(grlex_order(), Monomial({0, 0, 3}), Monomial({2, 0, 0})) > 0);
    CHECK(compare(grlex_order(), x2y, xy2) > 0);
  }
  SUBCASE("the elimination block order looks at slot 0 before anything") {
    CHECK(compare(elim1_order(), Monomial({1, 0, 0}), Monomial({0, 9, 9})) > 0);
    // equal slot 0: grevlex on the tail
    CHECK(compare(elim1_order(), Monomial({1, 2, 1}), Monomial({1, 1, 2})) > 0);
  }
  SUBCASE("gradedness and names") {
    CHECK(is_graded(grevlex_order()));
    CHECK(is_graded(grlex_order()));
    CHECK_FALSE(is_graded(lex_order()));
    CHECK_FALSE(is_graded(elim1_order()));
    CHECK(order_from_name("grevlex") == grevlex_order());
    CHECK(order_from_name("lex") == lex_order());
    CHECK_FALSE(order_from_name("elim1").has_value());
    CHECK_FALSE(order_from_name("degrevlex").has_value());
  }
}

TEST_CASE("polynomial canonical form") {
  PrimeField f5(5);
  MonomialOrder order = grevlex_order();
  // 3*t1*t2 + 7*t2^2 + 2*t1*t2 + 5*t3^2 -> 2*t2^2 (mod 5, merged, zero dropped)
  Polynomial f = Polynomial::from_terms(
      f5, 3, order,
      {Term{Monomial({1, 1, 0}), 3}, Term{Monomial({0, 2, 0}), 7},
       Term{Monomial({1, 1, 0}), 2}, Term{Monomial({0, 0, 2}), 5}});
  REQUIRE(f.terms().size() == 1);
  CHECK(f.leading_monomial() == Monomial({0, 2, 0}));
  CHECK(f.leading_coeff() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());

  Polynomial zero = Polynomial::from_terms(
      f5, 3, order, {Term{Monomial({1, 0, 0}), 5}});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.is_homogeneous());

  // terms strictly descending under the carried order
  Polynomial g = Polynomial::from_terms(
      f5, 3, order,
      {Term{Monomial({0, 0, 1}), 1}, Term{Monomial({2, 0, 0}), 1},
       Term{Monomial({1, 1, 0}), 1}});
  for (size_t i = 0; i + 1 < g.terms().size(); ++i) {
    CHECK(compare(order, g.terms()[i].mono, g.terms()[i + 1].mono) > 0);
  }
}

TEST_CASE("polynomial arithmetic and rendering") {
  PrimeField f3(3);
  MonomialOrder order = grevlex_order();
  Polynomial f = Polynomial::from_terms(
      f3, 2, order, {Term{Monomial({1, 0}), 1}, Term{Monomial({0, 1}), 2}});
  Polynomial g = Polynomial::from_terms(
      f3, 2, order, {Term{Monomial({1, 0}), 2}, Term{Monomial({0, 1}), 1}});
  CHECK((f + g).is_zero());
  CHECK((f - f).is_zero());
  Polynomial prod = f * f;  // (t1 + 2 t2)^2 = t1^2 + 4 t1 t2 + 4 t2^2 = t1^2 + t1t2 + t2^2
  CHECK(prod.terms().size() == 3);
  CHECK(to_string(prod) == "t1^2 + t1*t2 + t2^2");
  CHECK(to_string(f, {"x", "y"}) == "x + 2*y");
  CHECK(to_string(Polynomial(f3, 2, order)) == "0");
  CHECK(f.monic().leading_coeff() == 1);
  CHECK(f.scaled(2).equals(f + f));
}

TEST_CASE("polynomial ring and order guards") {
  PrimeField f2(2), f3(3);
  MonomialOrder order = grevlex_order();
  Polynomial f = Polynomial::constant(f2, 2, order, 1);
  Polynomial g = Polynomial::constant(f3, 2, order, 1);
  CHECK_THROWS_AS(f + g, RingMismatchError);
  Polynomial h = Polynomial::constant(f2, 3, order, 1);
  CHECK_THROWS_AS(f + h, RingMismatchError);
  // equals is tolerant of the order tag
  Polynomial flex = f.with_order(lex_order());
  CHECK(f.equals(flex));
}

TEST_CASE("division by a list of divisors") {
  PrimeField f7(7);
  MonomialOrder order = grevlex_order();
  std::mt19937_64 rng(20260822);
  // invariant: f = sum q_i g_i + r, no term of r divisible by any leading monomial
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial g1 = fixtures::random_homogeneous(rng, f7, 3, 2, order);
    Polynomial g2 = fixtures::random_homogeneous(rng, f7, 3, 3, order);
    Polynomial f = fixtures::random_homogeneous(rng, f7, 3, 4, order);
    if (g1.is_zero() || g2.is_zero() || f.is_zero()) continue;
    DivisionResult res = divide(f, {g1, g2});
    Polynomial rebuilt = res.quotients[0] * g1 + res.quotients[1] * g2 + res.remainder;
    CHECK(rebuilt.equals(f));
    for (const Term& t : res.remainder.terms()) {
      CHECK_FALSE(g1.leading_monomial().divides(t.mono));
      CHECK_FALSE(g2.leading_monomial().divides(t.mono));
    }
  }
  CHECK_THROWS_AS(
      divide(Polynomial::constant(f7, 3, order, 1), {Polynomial(f7, 3, order)}),
      InputError);
}

TEST_CASE("division takes the first matching divisor") {
  PrimeField f5(5);
  MonomialOrder order = grevlex_order();
  Polynomial t1 = Polynomial::monomial_poly(f5, order, Monomial({1, 0}));
  Polynomial t1_plus_t2 = Polynomial::from_terms(
      f5, 2, order, {Term{Monomial({1, 0}), 1}, Term{Monomial({0, 1}), 1}});
  Polynomial f = Polynomial::monomial_poly(f5, order, Monomial({1, 1}));
  // both divisors have leading monomial t1; the first one must be used
  DivisionResult res = divide(f, {t1_plus_t2, t1});
  CHECK_FALSE(res.quotients[0].is_zero());
  CHECK(res.quotients[1].is_zero());
}
