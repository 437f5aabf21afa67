#include <catch2/catch_amalgamated.hpp>

#include "padic/io.hpp"
#include "padic/random.hpp"

using namespace padic;

TEST_CASE("element literal round trip") {
  Rng rng(41);
  for (const Tower& t : {make_tower(2, 1, 1, 30), make_tower(3, 2, -1, 40),
                         make_tower(5, 3, 2, 45)}) {
    for (int i = 0; i < 30; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(-2, 4));
      Element back = element_from_json(element_to_json(x));
      REQUIRE(back.tower().compatible(t));
      REQUIRE(back.prec_pi() == x.prec_pi());
      REQUIRE(back.equals_at_precision(x));
      // canonical form serializes identically
      REQUIRE(element_to_json(back) == element_to_json(x));
    }
  }
}

TEST_CASE("element literal parsing") {
  Json j{{"p", 5}, {"e", 1}, {"u", 1}, {"prec", "3"}, {"coeffs", {"2*p^0"}}};
  Element x = element_from_json(j);
  CHECK(x.residue(3) == 2);
  SECTION("negative significand and exponent") {
    Json k{{"p", 5}, {"e", 1}, {"u", 1}, {"prec", "3"}, {"coeffs", {"-1*p^-1"}}};
    CHECK(element_from_json(k).valuation() == Valuation(Rational(-1)));
  }
  SECTION("malformed coefficient") {
    Json k = j;
    k["coeffs"] = {"2*q^0"};
    CHECK_THROWS_AS(element_from_json(k), ParseError);
  }
  SECTION("too many coefficients") {
    Json k = j;
    k["coeffs"] = {"1*p^0", "1*p^0"};
    CHECK_THROWS_AS(element_from_json(k), ParseError);
  }
  SECTION("coefficient list shorthand") {
    Tower t = make_tower(3, 2, 1, 20);
    Element y = element_from_coeff_list(t, "2*p^0, 1*p^0");
    CHECK(y.valuation() == Valuation(Rational(0)));
    CHECK_THROWS_AS(element_from_coeff_list(t, ""), ParseError);
  }
}

TEST_CASE("series literal round trip") {
  Tower t = make_tower(3, 1, 1, 20);
  Rng rng(43);
  RestrictedSeries f = rng.series(t, 2, 5, 3);
  RestrictedSeries back = series_from_json(series_to_json(f));
  REQUIRE(back.nvars() == f.nvars());
  REQUIRE(back.terms().size() == f.terms().size());
  CHECK(gauss_norm(back) == gauss_norm(f));
  SECTION("empty series needs a fallback tower") {
    Json j{{"nvars", 1}, {"terms", Json::array()}};
    CHECK_THROWS_AS(series_from_json(j), ParseError);
    CHECK(series_from_json(j, &t).terms().empty());
  }
}

TEST_CASE("config file round trip") {
  Tower t = make_tower(3, 1, 1, 40);
  CorrespondenceConfig cfg = default_config(t, 2);
  CorrespondenceConfig back = config_from_text(config_to_text(cfg));
  CHECK(back.g == 2);
  CHECK(back.alpha == cfg.alpha);
  CHECK(back.beta == cfg.beta);
  CHECK(config_validate(back) == Valuation(Rational(0)));
  SECTION("integer shorthand for matrices and beta=auto") {
    CorrespondenceConfig c2 = config_from_text(
        "p=3\ng=1\nalpha=3/2\nbeta=auto\nl_matrix=[0,1]\nB_matrix=[0]\n");
    CHECK(c2.beta == Rational(1));
    CHECK(config_validate(c2) == Valuation(Rational(0)));
  }
  SECTION("missing keys are parse errors") {
    CHECK_THROWS_AS(config_from_text("p=3\ng=1\n"), ParseError);
  }
}
