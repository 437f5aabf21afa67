#include <catch2/catch_amalgamated.hpp>

#include "padic/element.hpp"
#include "padic/random.hpp"

using namespace padic;

TEST_CASE("tower validation") {
  CHECK_THROWS_AS(make_tower(4), Error);           // not prime
  CHECK_THROWS_AS(make_tower(3, 0), Error);        // bad ramification
  CHECK_THROWS_AS(make_tower(3, 2, 6), Error);     // u not a unit
  CHECK_THROWS_AS(make_tower(3, 1, 1, 0), Error);  // no working digits
  Tower t = make_tower(3, 2, -1, 20);
  CHECK(t.e == 2);
  CHECK(t.u == -1);
}

TEST_CASE("addition") {
  SECTION("pi plus minus pi vanishes at precision") {
    Tower t = make_tower(3, 2, 1, 20);
    Element pi = Element::uniformizer(t);
    Element s = pi + pi.negated();
    CHECK(s.is_zero_at_precision());
    CHECK(s.prec_pi() == 20);
  }
  SECTION("plain integers, p=5") {
    Tower t = make_tower(5, 1, 1, 10);
    Element s = Element::from_integer(t, 5) + Element::from_integer(t, 20);
    CHECK(s.residue(3) == 25);
    CHECK(s.valuation() == Valuation(Rational(2)));
  }
  SECTION("distinct valuations add at the minimum") {
    Tower t = make_tower(3, 2, 1, 20);
    Element s = Element::uniformizer(t) + Element::from_integer(t, 3);
    CHECK(s.valuation() == Valuation(Rational(1, 2)));
  }
  SECTION("tower mismatch") {
    Tower a = make_tower(3), b = make_tower(5);
    CHECK_THROWS_AS(Element::one(a) + Element::one(b), TowerMismatch);
  }
}

TEST_CASE("multiplication and the defining relation") {
  SECTION("pi^2 = 3 for u=1") {
    Tower t = make_tower(3, 2, 1, 20);
    Element pi = Element::uniformizer(t);
    CHECK((pi * pi).equals_at_precision(Element::from_integer(t, 3)));
  }
  SECTION("pi^2 = -3 for u=-1") {
    Tower t = make_tower(3, 2, -1, 20);
    Element pi = Element::uniformizer(t);
    CHECK((pi * pi).equals_at_precision(Element::from_integer(t, -3)));
  }
  SECTION("5*5 = 25") {
    Tower t = make_tower(5, 1, 1, 10);
    Element q = Element::from_integer(t, 5) * Element::from_integer(t, 5);
    CHECK(q.residue(4) == 25);
    CHECK(q.valuation() == Valuation(Rational(2)));
  }
}

TEST_CASE("inverse") {
  Tower t = make_tower(5, 1, 1, 10);
  SECTION("identity") {
    CHECK(Element::one(t).inv().equals_at_precision(Element::one(t)));
  }
  SECTION("2^{-1} = 63 mod 125") {
    Element i = Element::from_integer(t, 2, 3).inv();
    CHECK(i.residue(3) == 63);
    CHECK(i.prec_pi() == 3);
  }
  SECTION("zero at precision is rejected") {
    CHECK_THROWS_AS(Element::zero(t).inv(), ZeroAtPrecision);
    CHECK_THROWS_AS(Element::from_integer(t, 125, 3).inv(), ZeroAtPrecision);
  }
  SECTION("negative valuation inverse") {
    Element x = Element::from_integer(t, 25);
    Element i = x.inv();
    CHECK(i.valuation() == Valuation(Rational(-2)));
    CHECK((x * i).equals_at_precision(Element::one(t)));
  }
}

TEST_CASE("ultrametric and multiplicativity properties") {
  Rng rng(7);
  for (int e : {1, 2, 3, 5}) {
    Tower t = make_tower(3, e, 1, 20 * e);
    for (int i = 0; i < 50; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(0, 4 * e));
      Element y = rng.with_pi_valuation(t, rng.range(0, 4 * e));
      Valuation lo = Valuation::min(x.valuation(), y.valuation());
      REQUIRE((x + y).valuation() >= lo);
      if (!(x.valuation() == y.valuation())) REQUIRE((x + y).valuation() == lo);
      REQUIRE((x * y).valuation() == x.valuation() + y.valuation());
    }
  }
}

TEST_CASE("inverse round trip on random units") {
  Rng rng(11);
  for (const Tower& t : {make_tower(2, 1, 1, 40), make_tower(3, 2, 1, 60),
                         make_tower(5, 1, 1, 40)}) {
    for (int i = 0; i < 200 / 3; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(0, 2 * t.e));
      Element q = x * x.inv();
      REQUIRE(q.equals_at_precision(Element::one(t, q.prec_pi())));
    }
  }
}

TEST_CASE("precision bookkeeping") {
  Tower t = make_tower(5, 1, 1, 10);
  SECTION("additive minimum") {
    Element a = Element::from_integer(t, 7, 4);
    Element b = Element::from_integer(t, 9, 8);
    CHECK((a + b).prec_pi() == 4);
  }
  SECTION("multiplication shifts by the partner valuation") {
    Element a = Element::from_integer(t, 25, 6);  // v=2, prec 6
    Element b = Element::from_integer(t, 3, 6);   // v=0
    CHECK((a * b).prec_pi() == 6);
    CHECK((a * a).prec_pi() == 8);
  }
  SECTION("nonzero elements keep a significant digit") {
    Element a = Element::from_integer(t, 24, 2);
    REQUIRE(!a.is_zero_at_precision());
    CHECK(Valuation(a.abs_prec()) > a.valuation());
  }
}
