#include <catch2/catch_amalgamated.hpp>

#include "padic/random.hpp"
#include "padic/tate.hpp"

using namespace padic;

namespace {

RestrictedSeries make_poly(const Tower& t,
                           std::vector<std::pair<Monomial, long long>> terms,
                           int nvars) {
  RestrictedSeries f(t, nvars);
  for (auto& [m, c] : terms) f.add_term(m, Element::from_integer(t, c));
  return f;
}

}  // namespace

TEST_CASE("gauss_norm") {
  Tower t = make_tower(3, 1, 1, 20);
  SECTION("3 + x1 + 9*x2^2 has norm 1") {
    auto f = make_poly(t, {{{0, 0}, 3}, {{1, 0}, 1}, {{0, 2}, 9}}, 2);
    CHECK(gauss_norm(f) == Valuation(Rational(0)));
  }
  SECTION("empty series is infinitely small") {
    RestrictedSeries f(t, 2);
    CHECK(gauss_norm(f).is_infinite());
  }
  SECTION("single term p*x1*x2") {
    auto f = make_poly(t, {{{1, 1}, 3}}, 2);
    CHECK(gauss_norm(f) == Valuation(Rational(1)));
  }
}

TEST_CASE("series_mul") {
  Tower t = make_tower(3, 1, 1, 20);
  auto f = make_poly(t, {{{0}, 3}, {{1}, 1}}, 1);  // 3 + x
  SECTION("identity") {
    auto one = make_poly(t, {{{0}, 1}}, 1);
    auto prod = series_mul(f, one);
    CHECK(prod.terms().size() == 2);
    CHECK(gauss_norm(prod) == gauss_norm(f));
  }
  SECTION("(3+x)(1+3x) = 3 + 10x + 3x^2") {
    auto g = make_poly(t, {{{0}, 1}, {{1}, 3}}, 1);
    auto prod = series_mul(f, g);
    REQUIRE(prod.terms().size() == 3);
    CHECK(prod.terms().at({1}).residue(3) == 10);
    CHECK(gauss_norm(prod) == Valuation(Rational(0)));
  }
  SECTION("absorbing zero") {
    RestrictedSeries zero(t, 1);
    CHECK(series_mul(f, zero).terms().empty());
  }
  SECTION("shape mismatch") {
    RestrictedSeries g(t, 2);
    CHECK_THROWS_AS(series_mul(f, g), DimensionMismatch);
  }
}

TEST_CASE("evaluate") {
  Tower t = make_tower(3, 1, 1, 20);
  SECTION("monomial at the origin") {
    auto f = make_poly(t, {{{1}, 1}}, 1);
    CHECK(evaluate(f, {Element::zero(t)}).is_zero_at_precision());
  }
  SECTION("3 + x at 1") {
    auto f = make_poly(t, {{{0}, 3}, {{1}, 1}}, 1);
    Element v = evaluate(f, {Element::one(t)});
    CHECK(v.residue(2) == 4);
    CHECK(v.valuation() == Valuation(Rational(0)));
  }
  SECTION("x1*x2 at (p, p)") {
    auto f = make_poly(t, {{{1, 1}, 1}}, 2);
    Element p = Element::from_integer(t, 3);
    CHECK(evaluate(f, {p, p}).valuation() == Valuation(Rational(2)));
  }
  SECTION("points outside the unit ball are rejected") {
    auto f = make_poly(t, {{{1}, 1}}, 1);
    Element bad = Element::from_integer(t, 3).inv();
    CHECK_THROWS_AS(evaluate(f, {bad}), OutOfBall);
  }
}

TEST_CASE("sup_sample") {
  SECTION("monomial attains its norm at a unit") {
    Tower t = make_tower(3, 1, 1, 20);
    auto f = make_poly(t, {{{1}, 1}}, 1);
    std::vector<std::vector<Element>> pts{
        {Element::zero(t)}, {Element::one(t)}, {Element::from_integer(t, 3)}};
    CHECK(sup_sample(f, pts) == Valuation(Rational(0)));
    CHECK(sup_sample(f, pts) == gauss_norm(f));
  }
  SECTION("one-sided bound") {
    Tower t = make_tower(3, 1, 1, 20);
    auto f = make_poly(t, {{{0}, 3}, {{2}, 1}}, 1);  // p + x^2
    CHECK(sup_sample(f, {{Element::zero(t)}}) == Valuation(Rational(1)));
    CHECK(gauss_norm(f) == Valuation(Rational(0)));
  }
  SECTION("x(x-1) over p=2 vanishes at every base-field sample") {
    Tower t = make_tower(2, 1, 1, 20);
    auto f = make_poly(t, {{{2}, 1}, {{1}, -1}}, 1);
    std::vector<std::vector<Element>> pts{{Element::zero(t)}, {Element::one(t)}};
    CHECK(sup_sample(f, pts).is_infinite());
    CHECK(gauss_norm(f) == Valuation(Rational(0)));
  }
}

TEST_CASE("weierstrass_member") {
  Tower t = make_tower(3, 1, 1, 20);
  auto x = make_poly(t, {{{1}, 1}}, 1);
  SECTION("x1 at 0") {
    CHECK(weierstrass_member({Element::zero(t)}, {x}));
  }
  SECTION("(1/p)*x1 at 1 lies outside") {
    RestrictedSeries f(t, 1);
    f.add_term({1}, Element::from_integer(t, 3).inv());
    CHECK(!weierstrass_member({Element::one(t)}, {f}));
  }
  SECTION("empty family accepts everything") {
    CHECK(weierstrass_member({Element::one(t)}, {}));
  }
}

TEST_CASE("gauss properties") {
  Rng rng(23);
  for (long long p : {2, 3, 5}) {
    Tower t = make_tower(p, 1, 1, 30);
    auto grid = sample_grid(default_sample_values(t), 2);
    for (int i = 0; i < 200 / 3; ++i) {
      RestrictedSeries f = rng.series(t, 2, 4, 3);
      RestrictedSeries g = rng.series(t, 2, 4, 3);
      REQUIRE(gauss_norm(series_mul(f, g)) == gauss_norm(f) + gauss_norm(g));
      REQUIRE(gauss_norm(series_add(f, g)) >=
              Valuation::min(gauss_norm(f), gauss_norm(g)));
      REQUIRE(sup_sample(f, grid) >= gauss_norm(f));
    }
  }
}
