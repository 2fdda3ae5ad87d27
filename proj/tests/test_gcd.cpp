#include <catch2/catch_amalgamated.hpp>

#include "germlab/germlab.hpp"
#include "support/test_support.hpp"

using namespace germlab;
using testsupport::random_poly;

namespace {

Ring ring2() { return Ring({"x", "y"}); }

Polynomial nonzero_poly(const Ring& r, SplitMix64& rng, unsigned max_degree, unsigned max_terms) {
  for (;;) {
    Polynomial p = random_poly(r, rng, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

bool divides(const Polynomial& d, const Polynomial& p) {
  try {
    divide_exact(p, d);
    return true;
  } catch (const NotDivisibleError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("gcd boundary cases") {
  Ring r = ring2();
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial zero(r);

  REQUIRE(gcd(zero, zero).is_zero());
  REQUIRE(gcd(Rational(3) * x, zero) == x);
  REQUIRE(gcd(zero, Rational(-2) * y) == y);
  REQUIRE(gcd(x, y) == Polynomial(r, Rational(1)));
  REQUIRE(gcd(Polynomial(r, Rational(6)), Polynomial(r, Rational(4))) ==
          Polynomial(r, Rational(1)));
  REQUIRE_THROWS_AS(gcd(x, Polynomial::variable(Ring({"x", "y", "z"}), 0)), RingMismatchError);
}

TEST_CASE("gcd on known factorizations") {
  Ring r = ring2();
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial one(r, Rational(1));

  // (x-y)(x+y) and (x+y)^2 share exactly x+y.
  REQUIRE(gcd(x * x - y * y, x * x + Rational(2) * x * y + y * y) == x + y);
  // Univariate inside a bivariate ring.
  Polynomial a = (x - one) * (x - Polynomial(r, Rational(2)));
  Polynomial b = (x - one) * (x - Polynomial(r, Rational(3)));
  REQUIRE(gcd(a, b) == x - one);
  // Monomial contents come out too.
  REQUIRE(gcd(x * x * y, x * y * y) == x * y);
  // The result is normalized regardless of input scaling.
  REQUIRE(gcd(rational(7, 3) * (x + y), Rational(-5) * (x + y) * x) == x + y);
}

TEST_CASE("gcd divides both inputs and contains constructed factors") {
  SplitMix64 rng(9001);
  for (int trial = 0; trial < 40; ++trial) {
    Ring r = trial % 3 == 0 ? Ring({"x", "y", "z"}) : ring2();
    unsigned deg = r.dimension() == 3 ? 2 : 3;
    Polynomial a = nonzero_poly(r, rng, deg, 3);
    Polynomial b = nonzero_poly(r, rng, deg, 3);
    Polynomial c = nonzero_poly(r, rng, deg, 3);

    Polynomial g = gcd(a * c, b * c);
    REQUIRE_FALSE(g.is_zero());
    REQUIRE(divides(g, a * c));
    REQUIRE(divides(g, b * c));
    // gcd(ac, bc) is a multiple of c.
    REQUIRE(divides(c, g));
  }
}

TEST_CASE("gcd is symmetric and idempotent on its output") {
  SplitMix64 rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    Ring r = ring2();
    Polynomial a = nonzero_poly(r, rng, 4, 4);
    Polynomial b = nonzero_poly(r, rng, 4, 4);
    Polynomial g = gcd(a, b);
    REQUIRE(gcd(b, a) == g);
    REQUIRE(gcd(a, a) == a.normalized());
    if (!g.is_constant()) {
      REQUIRE(gcd(g, a) == g);
      REQUIRE(gcd(g, b) == g);
    }
  }
}

TEST_CASE("squarefree part on known inputs") {
  Ring r = ring2();
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);

  REQUIRE(squarefree_part(x * x) == x);
  REQUIRE(squarefree_part(x * x * y.pow(3)) == x * y);
  REQUIRE(squarefree_part((x + y) * (x + y) * x) == x * x + x * y);
  REQUIRE(squarefree_part(x.pow(3) - y * y) == (x.pow(3) - y * y).normalized());
  REQUIRE_THROWS_AS(squarefree_part(Polynomial(r, Rational(5))), ConstantInputError);
  REQUIRE_THROWS_AS(squarefree_part(Polynomial(r)), ConstantInputError);
}

TEST_CASE("squarefree laws on random inputs") {
  SplitMix64 rng(271828);
  for (int trial = 0; trial < 25; ++trial) {
    Ring r = ring2();
    Polynomial p = nonzero_poly(r, rng, 3, 3);
    if (p.is_constant()) continue;
    Polynomial s = squarefree_part(p);

    // The squarefree part divides the polynomial and is idempotent.
    REQUIRE(divides(s, p));
    REQUIRE(squarefree_part(s) == s);

    // Powers do not change the squarefree part.
    for (unsigned k = 2; k <= 4; ++k) REQUIRE(squarefree_part(p.pow(k)) == s);

    // A squarefree polynomial is coprime with its own gradient.
    Polynomial g = s;
    for (std::size_t i = 0; i < r.dimension() && !g.is_constant(); ++i) {
      Polynomial d = s.partial_derivative(i);
      if (!d.is_zero()) g = gcd(g, d);
    }
    REQUIRE(g.is_constant());
  }
}

TEST_CASE("squarefree part strips constructed repeated factors") {
  SplitMix64 rng(161803);
  Ring r = ring2();
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial a = nonzero_poly(r, rng, 2, 2);
    Polynomial b = nonzero_poly(r, rng, 2, 2);
    if (a.is_constant() || b.is_constant()) continue;
    Polynomial p = a * a * b;
    Polynomial s = squarefree_part(p);
    // a^2*b and a*b carry the same set of irreducible factors.
    REQUIRE(divides(s, a * b));
    REQUIRE(squarefree_part(a * b) == s);
  }
}
