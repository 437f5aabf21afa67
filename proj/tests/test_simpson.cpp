#include <catch2/catch_amalgamated.hpp>

#include "padic/checks.hpp"
#include "padic/random.hpp"
#include "padic/simpson.hpp"

using namespace padic;

TEST_CASE("config_validate") {
  Tower t = make_tower(5, 1, 1, 40);
  SECTION("default configuration: M = [[0,1],[1,0]], det valuation 0") {
    CorrespondenceConfig cfg = default_config(t, 1);
    CHECK(config_validate(cfg) == Valuation(Rational(0)));
    Matrix M = correspondence_matrix(cfg);
    CHECK(M.at(0, 0).is_zero_at_precision());
    CHECK(M.at(0, 1).equals_at_precision(Element::one(t)));
    CHECK(M.at(1, 0).equals_at_precision(Element::one(t)));
    CHECK(M.at(1, 1).is_zero_at_precision());
  }
  SECTION("alpha exactly at 1/(p-1) violates smallness") {
    CorrespondenceConfig cfg = default_config(t, 1);
    cfg.alpha = Rational(1, t.p - 1);
    cfg.beta = (cfg.alpha + Rational(1, t.p - 1)) / Rational(2);
    CHECK_THROWS_AS(config_validate(cfg), SmallnessViolation);
  }
  SECTION("beta off the 2*beta = alpha + 1/(p-1) relation is rejected") {
    CorrespondenceConfig cfg = default_config(t, 1);
    cfg.beta = cfg.beta + Rational(1, 10);
    CHECK_THROWS_AS(config_validate(cfg), SmallnessViolation);
  }
  SECTION("rank-deficient l gives SingularConfig") {
    CorrespondenceConfig cfg = default_config(t, 1);
    cfg.l.at(1, 0) = Element::zero(t);
    CHECK_THROWS_AS(config_validate(cfg), SingularConfig);
  }
}

TEST_CASE("beta_map") {
  Tower t = make_tower(5, 1, 1, 40);
  CorrespondenceConfig cfg = default_config(t, 1);
  Element z25 = Element::from_integer(t, 25);
  SECTION("zero maps to zero") {
    auto out = beta_map({Element::zero(t)}, cfg);
    REQUIRE(out.size() == 2);
    CHECK(out[0].is_zero_at_precision());
    CHECK(out[1].is_zero_at_precision());
  }
  SECTION("zero lifting") {
    auto out = beta_map({z25}, cfg);
    CHECK(out[0].equals_at_precision(z25));
    CHECK(out[1].is_zero_at_precision());
  }
  SECTION("identity lifting") {
    cfg.B.at(0, 0) = Element::one(t);
    auto out = beta_map({z25}, cfg);
    CHECK(out[0].equals_at_precision(z25));
    CHECK(out[1].equals_at_precision(z25));
  }
}

TEST_CASE("higgs_to_character") {
  Tower t = make_tower(5, 1, 1, 40);
  CorrespondenceConfig cfg = default_config(t, 1);
  SECTION("zero Higgs field gives the trivial character") {
    auto rho = higgs_to_character({Element::zero(t)}, cfg);
    CHECK(rho[0].equals_at_precision(Element::one(t)));
    CHECK(rho[1].equals_at_precision(Element::one(t)));
  }
  SECTION("theta = 25: exp(25) = 26 mod 5^4 in the first slot") {
    auto rho = higgs_to_character({Element::from_integer(t, 25)}, cfg);
    CHECK(rho[0].residue(4) == 26);
    CHECK(rho[1].equals_at_precision(Element::one(t)));
  }
  SECTION("theta below alpha is rejected before evaluation") {
    CHECK_THROWS_AS(higgs_to_character({Element::one(t)}, cfg),
                    SmallnessViolation);
  }
}

TEST_CASE("pic_to_character") {
  Tower t = make_tower(5, 1, 1, 40);
  CorrespondenceConfig cfg = default_config(t, 1);
  SECTION("origin gives the trivial character") {
    auto rho = pic_to_character({Element::zero(t)}, cfg);
    CHECK(rho[0].equals_at_precision(Element::one(t)));
    CHECK(rho[1].equals_at_precision(Element::one(t)));
  }
  SECTION("z = p^2 lands in the second slot") {
    auto rho = pic_to_character({Element::from_integer(t, 25)}, cfg);
    CHECK(rho[0].equals_at_precision(Element::one(t)));
    CHECK(rho[1].residue(4) == 26);
  }
  SECTION("z outside the exp domain is a DomainError") {
    CHECK_THROWS_AS(pic_to_character({Element::one(t)}, cfg), DomainError);
  }
}

TEST_CASE("forward and inverse") {
  Tower t = make_tower(5, 1, 1, 40);
  CorrespondenceConfig cfg = default_config(t, 1);
  Element zero = Element::zero(t);
  SECTION("trivial pair maps to the trivial character and back") {
    ForwardResult fw = forward({zero}, {zero}, cfg);
    CHECK(fw.rho[0].equals_at_precision(Element::one(t)));
    CHECK(fw.rho[1].equals_at_precision(Element::one(t)));
    CHECK(fw.small);
    InverseResult bw = inverse(fw.rho, cfg);
    CHECK(bw.z[0].is_zero_at_precision());
    CHECK(bw.theta[0].is_zero_at_precision());
  }
  SECTION("forward reduces to higgs_to_character when z = 0") {
    ForwardResult fw = forward({zero}, {Element::from_integer(t, 25)}, cfg);
    CHECK(fw.rho[0].residue(4) == 26);
    CHECK(fw.rho[1].equals_at_precision(Element::one(t)));
  }
  SECTION("inverse of (exp(25), 1) recovers z = 0, theta = 25") {
    std::vector<Element> rho{padic_exp(Element::from_integer(t, 25)),
                             Element::one(t)};
    InverseResult bw = inverse(rho, cfg);
    CHECK(bw.z[0].is_zero_at_precision());
    CHECK((bw.theta[0] - Element::from_integer(t, 25)).valuation() >=
          Valuation(Rational(32)));
  }
  SECTION("non-small characters are rejected") {
    std::vector<Element> rho{Element::from_integer(t, 1 + 5), Element::one(t)};
    CHECK_THROWS_AS(inverse(rho, cfg), SmallnessViolation);
  }
}

TEST_CASE("smallness predicates") {
  SECTION("p=3, alpha=1, theta=(3)") {
    Tower t = make_tower(3, 1, 1, 40);
    CorrespondenceConfig cfg = default_config(t, 1);
    cfg.alpha = Rational(1);
    cfg.beta = (cfg.alpha + Rational(1, 2)) / Rational(2);
    CHECK(is_small_higgs({Element::from_integer(t, 3)}, cfg));
    CHECK(!is_small_higgs({Element::one(t)}, cfg));
    CHECK(is_small_higgs({Element::zero(t)}, cfg));
  }
  SECTION("p=3, beta=3/4, v(rho-1)=3/2 passes the congruence") {
    Tower t = make_tower(3, 2, 1, 80);
    CorrespondenceConfig cfg = default_config(t, 1);
    cfg.alpha = Rational(1);
    cfg.beta = Rational(3, 4);
    REQUIRE(Rational(2) * cfg.beta == cfg.alpha + Rational(1, 2));
    Element rho = Element::one(t) + Element::uniformizer(t).pow(3);
    CHECK(is_small_character({rho, rho}, cfg));
  }
}

TEST_CASE("round trips across towers and configurations") {
  Rng rng(31);
  for (const Tower& t : {make_tower(2, 1, 1, 40), make_tower(3, 1, 1, 40),
                         make_tower(3, 2, 1, 80), make_tower(5, 1, 1, 40)}) {
    CorrespondenceConfig def = default_config(t, 1);
    Rational bound = Rational(2) * def.beta;
    for (int i = 0; i < 20; ++i) {
      std::vector<Element> z{rng.above(t, bound, false)};
      std::vector<Element> theta{rng.above(t, bound, false)};
      ForwardResult fw = forward(z, theta, def);
      REQUIRE(fw.small);
      InverseResult bw = inverse(fw.rho, def);
      REQUIRE((bw.z[0] - z[0]).valuation() >= Valuation(Rational(32)));
      REQUIRE((bw.theta[0] - theta[0]).valuation() >= Valuation(Rational(32)));
    }
    // random validated configuration, genus 2
    CorrespondenceConfig cfg = checks::random_config(rng, t, 2);
    Rational b2 = Rational(2) * cfg.beta;
    for (int i = 0; i < 5; ++i) {
      std::vector<Element> z{rng.above(t, b2, false), rng.above(t, b2, false)};
      std::vector<Element> theta{rng.above(t, b2, false), rng.above(t, b2, false)};
      ForwardResult fw = forward(z, theta, cfg);
      InverseResult bw = inverse(fw.rho, cfg);
      for (int k = 0; k < 2; ++k) {
        REQUIRE((bw.z[k] - z[k]).valuation() >= Valuation(Rational(32)));
        REQUIRE((bw.theta[k] - theta[k]).valuation() >= Valuation(Rational(32)));
      }
    }
  }
}
