#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "padic/random.hpp"
#include "padic/simpson.hpp"
#include "padic/tate.hpp"

namespace padic {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first counterexample, empty when passing

  void fail(const std::string& d) {
    if (pass) detail = d;
    pass = false;
  }
};

struct CheckOptions {
  unsigned long long seed = 1;
  long long trials = 25;        // random samples per tower and property
  long long prec_digits = 40;   // working precision in p-adic digits
  bool break_isometry = false;  // fault injection for harness self-test
};

inline std::vector<Tower> standard_towers(long long digits) {
  return {make_tower(2, 1, 1, digits), make_tower(3, 1, 1, digits),
          make_tower(3, 2, 1, 2 * digits), make_tower(5, 1, 1, digits),
          make_tower(3, 5, 1, 5 * digits)};
}

namespace checks {

inline std::string tower_tag(const Tower& t) {
  return "(p=" + std::to_string(t.p) + ",e=" + std::to_string(t.e) + ")";
}

inline CheckResult ultrametric_addition(const CheckOptions& opt) {
  CheckResult r{"ultrametric-addition"};
  Rng rng(opt.seed ^ 0x1001);
  for (int e : {1, 2, 3, 5}) {
    Tower t = make_tower(3, e, 1, e * opt.prec_digits);
    for (long long i = 0; i < opt.trials; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(0, 4 * e));
      Element y = rng.with_pi_valuation(t, rng.range(0, 4 * e));
      Valuation vs = (x + y).valuation();
      Valuation lo = Valuation::min(x.valuation(), y.valuation());
      ++r.cases;
      if (vs < lo)
        r.fail(tower_tag(t) + " v(x+y)=" + vs.to_string() + " < min=" + lo.to_string());
      if (!(x.valuation() == y.valuation()) && !(vs == lo))
        r.fail(tower_tag(t) + " distinct valuations but v(x+y)=" + vs.to_string());
    }
  }
  return r;
}

inline CheckResult valuation_multiplicativity(const CheckOptions& opt) {
  CheckResult r{"valuation-multiplicativity"};
  Rng rng(opt.seed ^ 0x1002);
  for (int e : {1, 2, 3, 5}) {
    Tower t = make_tower(3, e, 1, e * opt.prec_digits);
    for (long long i = 0; i < opt.trials; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(0, 3 * e));
      Element y = rng.with_pi_valuation(t, rng.range(0, 3 * e));
      ++r.cases;
      if (!((x * y).valuation() == x.valuation() + y.valuation()))
        r.fail(tower_tag(t) + " v(xy) != v(x)+v(y)");
    }
  }
  return r;
}

inline CheckResult inverse_round_trip(const CheckOptions& opt) {
  CheckResult r{"inverse-round-trip"};
  Rng rng(opt.seed ^ 0x1003);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    for (long long i = 0; i < 200 / 5; ++i) {
      Element x = rng.with_pi_valuation(t, rng.range(0, 2 * t.e));
      Element q = x * x.inv();
      ++r.cases;
      if (!q.equals_at_precision(Element::one(t, q.prec_pi())))
        r.fail(tower_tag(t) + " x*inv(x) != 1 at precision");
    }
  }
  return r;
}

inline CheckResult legendre_factorial_valuation(const CheckOptions&) {
  CheckResult r{"legendre-factorial-valuation"};
  for (long long p : {2, 3, 5, 7}) {
    for (long long k = 0; k <= 2000; ++k) {
      long long legendre = 0;
      for (long long q = p; q <= k; q *= p) legendre += k / q;
      ++r.cases;
      if (!(factorial_valuation(p, k) == Rational(legendre)))
        r.fail("p=" + std::to_string(p) + " k=" + std::to_string(k));
    }
  }
  return r;
}

inline CheckResult binomial_valuation_product_formula(const CheckOptions&) {
  CheckResult r{"binomial-valuation-product-formula"};
  auto ord = [](long long p, cpp_int n) {
    long long v = 0;
    if (n < 0) n = -n;
    while (n != 0 && n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  };
  for (long long p : {2, 3, 5}) {
    // C(1/p,k) = prod_{i<k} (1 - i*p) / (p * (i+1)), tracked as an exact
    // fraction; its valuation must match the closed digit-sum formula
    cpp_int num = 1;
    long long den_val = 0;  // v_p of the denominator p^k * k!
    for (long long k = 0; k <= 200; ++k) {
      Rational expect = binom_inv_p_valuation(p, k);
      Rational got(ord(p, num) - den_val);
      ++r.cases;
      if (!(expect == got))
        r.fail("p=" + std::to_string(p) + " k=" + std::to_string(k) +
               " formula=" + expect.to_string() + " exact=" + got.to_string());
      num *= (1 - k * p);
      den_val += 1 + int_valuation(p, k + 1);
    }
  }
  return r;
}

inline CheckResult classifier_term_oracle(const CheckOptions&) {
  CheckResult r{"classifier-term-oracle"};
  for (SeriesKind kind :
       {SeriesKind::Exp, SeriesKind::Log, SeriesKind::BinomialPthRoot}) {
    for (long long p : {2, 3, 5}) {
      for (int e : {1, 2, 3, 5}) {
        for (long long m = -2 * e; m <= 4 * e; ++m) {
          Valuation v{Rational(m, e)};
          // the log terms only start climbing once p^j*(p-1)*v > 1, so the
          // oracle reads the tail of the j-range; boundaries stay divergent
          // because there the valuations are constant or decreasing forever
          bool oracle = true;
          long long pj = 1;
          for (int j = 1; j <= 12; ++j) {
            long long pj1 = pj * p;
            if (j >= 6 &&
                !(term_valuation(kind, p, pj1, v) > term_valuation(kind, p, pj, v)))
              oracle = false;
            pj = pj1;
          }
          ++r.cases;
          if (classify(kind, p, v).converges != oracle)
            r.fail(std::string(kind_name(kind)) + " p=" + std::to_string(p) +
                   " v=" + v.to_string());
        }
      }
    }
  }
  return r;
}

inline CheckResult exp_homomorphism(const CheckOptions& opt) {
  CheckResult r{"exp-homomorphism"};
  Rng rng(opt.seed ^ 0x2001);
  Rational floor_res(opt.prec_digits - 6);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    Rational bound = Rational(1, t.p - 1);
    for (long long i = 0; i < opt.trials; ++i) {
      Element x = rng.above(t, bound, true);
      Element y = rng.above(t, bound, true);
      Element d = padic_exp(x + y) - padic_exp(x) * padic_exp(y);
      ++r.cases;
      if (d.valuation() < Valuation(floor_res))
        r.fail(tower_tag(t) + " residual " + d.valuation().to_string());
    }
  }
  return r;
}

inline CheckResult exp_log_round_trip(const CheckOptions& opt) {
  CheckResult r{"exp-log-round-trip"};
  Rng rng(opt.seed ^ 0x2002);
  Rational floor_res(opt.prec_digits - 6);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    Rational bound = Rational(1, t.p - 1) + Rational(1, 10);
    for (long long i = 0; i < opt.trials; ++i) {
      Element x = rng.above(t, bound, false);
      Element d1 = padic_log(padic_exp(x)) - x;
      Element one = Element::one(t);
      Element d2 = padic_exp(padic_log(one + x)) - (one + x);
      ++r.cases;
      if (d1.valuation() < Valuation(floor_res))
        r.fail(tower_tag(t) + " log(exp) residual " + d1.valuation().to_string());
      if (d2.valuation() < Valuation(floor_res))
        r.fail(tower_tag(t) + " exp(log) residual " + d2.valuation().to_string());
    }
  }
  return r;
}

inline CheckResult log_isometry(const CheckOptions& opt) {
  CheckResult r{"log-isometry"};
  Rng rng(opt.seed ^ 0x2003);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    Rational bound = Rational(1, t.p - 1);
    for (long long i = 0; i < opt.trials; ++i) {
      Element y = rng.above(t, bound, true);
      Valuation lv = padic_log(Element::one(t) + y).valuation();
      Valuation expect = y.valuation();
      if (opt.break_isometry)
        expect = expect + Valuation(Rational(1));  // deliberate fault
      ++r.cases;
      if (!(lv == expect))
        r.fail(tower_tag(t) + " v(log(1+y))=" + lv.to_string() +
               " expected " + expect.to_string() + " with v(y)=" +
               y.valuation().to_string());
    }
  }
  return r;
}

inline CheckResult log_kills_torsion(const CheckOptions&) {
  CheckResult r{"log-kills-torsion"};
  Tower t = make_tower(2, 1, 1, 60);
  Element minus_one = Element::from_integer(t, -1);
  Valuation v = padic_log(minus_one).valuation();
  r.cases = 1;
  if (v < Valuation(Rational(55)))
    r.fail("v(log(-1)) = " + v.to_string() + " < 55 at N=60");
  return r;
}

inline CheckResult pth_root_identity(const CheckOptions& opt) {
  CheckResult r{"pth-root-identity"};
  Rng rng(opt.seed ^ 0x2004);
  Rational floor_res(opt.prec_digits - 6);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    Rational bound = Rational(t.p, t.p - 1);
    for (long long i = 0; i < opt.trials; ++i) {
      Element x = rng.above(t, bound, true);
      Element z = pth_root_binomial(x);
      Element d = z.pow(static_cast<unsigned long long>(t.p)) -
                  (Element::one(t) + x);
      ++r.cases;
      if (d.valuation() < Valuation(floor_res))
        r.fail(tower_tag(t) + " residual " + d.valuation().to_string());
    }
  }
  return r;
}

inline CheckResult stage1_overlap_consistency(const CheckOptions& opt) {
  CheckResult r{"stage1-overlap-consistency"};
  Rng rng(opt.seed ^ 0x2005);
  Rational floor_res(opt.prec_digits - 6);
  for (const Tower& t : standard_towers(opt.prec_digits)) {
    Rational bound = Rational(1, t.p - 1);
    for (long long i = 0; i < opt.trials / 2 + 1; ++i) {
      Element y = rng.above(t, bound, true);
      Element d = exp_extended_stage1(y) - padic_exp(y);
      ++r.cases;
      if (d.valuation() < Valuation(floor_res))
        r.fail(tower_tag(t) + " residual " + d.valuation().to_string());
    }
  }
  return r;
}

inline CheckResult stage1_obstruction_split(const CheckOptions& opt) {
  CheckResult r{"stage1-obstruction-split"};
  Rng rng(opt.seed ^ 0x2006);
  Tower t = make_tower(3, 5, 1, 5 * opt.prec_digits);
  Rational floor_res(opt.prec_digits - 6);
  for (long long m = -2; m <= 7; ++m) {
    Element y = rng.with_pi_valuation(t, m);
    Rational v(m, 5);
    bool exp_ok = v + Rational(1) > Rational(1, 2);
    bool root_ok = v + Rational(1) > Rational(3, 2);
    ++r.cases;
    try {
      Element z = exp_extended_stage1(y);
      if (!root_ok) {
        r.fail("v(y)=" + v.to_string() + " should have hit the obstruction");
        continue;
      }
      Element d = z.pow(3) - padic_exp(y.scaled(3));
      if (d.valuation() < Valuation(floor_res))
        r.fail("v(y)=" + v.to_string() + " cube residual " + d.valuation().to_string());
    } catch (const RootDomainError&) {
      if (root_ok || !exp_ok)
        r.fail("v(y)=" + v.to_string() + " unexpected RootDomainError");
    } catch (const DomainError&) {
      if (exp_ok) r.fail("v(y)=" + v.to_string() + " unexpected DomainError");
    }
  }
  return r;
}

inline CheckResult gauss_multiplicativity(const CheckOptions& opt) {
  CheckResult r{"gauss-multiplicativity"};
  Rng rng(opt.seed ^ 0x3001);
  for (long long p : {2, 3, 5}) {
    Tower t = make_tower(p, 1, 1, opt.prec_digits);
    for (long long i = 0; i < std::max<long long>(opt.trials, 200 / 3); ++i) {
      RestrictedSeries f = rng.series(t, 2, 4, 3);
      RestrictedSeries g = rng.series(t, 2, 4, 3);
      ++r.cases;
      if (!(gauss_norm(series_mul(f, g)) == gauss_norm(f) + gauss_norm(g)))
        r.fail("p=" + std::to_string(p) + " trial " + std::to_string(i));
    }
  }
  return r;
}

inline CheckResult gauss_triangle(const CheckOptions& opt) {
  CheckResult r{"gauss-triangle"};
  Rng rng(opt.seed ^ 0x3002);
  for (long long p : {2, 3, 5}) {
    Tower t = make_tower(p, 1, 1, opt.prec_digits);
    for (long long i = 0; i < opt.trials; ++i) {
      RestrictedSeries f = rng.series(t, 2, 4, 3);
      RestrictedSeries g = rng.series(t, 2, 4, 3);
      ++r.cases;
      if (gauss_norm(series_add(f, g)) <
          Valuation::min(gauss_norm(f), gauss_norm(g)))
        r.fail("p=" + std::to_string(p) + " trial " + std::to_string(i));
    }
  }
  return r;
}

inline CheckResult sup_sample_bound(const CheckOptions& opt) {
  CheckResult r{"sup-sample-bound"};
  Rng rng(opt.seed ^ 0x3003);
  for (long long p : {2, 3, 5}) {
    Tower t = make_tower(p, 1, 1, opt.prec_digits);
    auto grid = sample_grid(default_sample_values(t), 2);
    for (long long i = 0; i < opt.trials; ++i) {
      RestrictedSeries f = rng.series(t, 2, 4, 3);
      ++r.cases;
      if (sup_sample(f, grid) < gauss_norm(f))
        r.fail("p=" + std::to_string(p) + " sampled sup exceeded Gauss norm");
    }
  }
  return r;
}

inline CheckResult monomial_attainment(const CheckOptions& opt) {
  CheckResult r{"monomial-attainment"};
  Rng rng(opt.seed ^ 0x3004);
  for (long long p : {2, 3, 5}) {
    Tower t = make_tower(p, 1, 1, opt.prec_digits);
    for (long long i = 0; i < opt.trials; ++i) {
      RestrictedSeries f(t, 2);
      Monomial m{static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3))};
      f.add_term(m, rng.with_pi_valuation(t, 0));
      std::vector<std::vector<Element>> pts{
          {Element::one(t), Element::one(t)}};
      ++r.cases;
      if (!(sup_sample(f, pts) == gauss_norm(f)))
        r.fail("p=" + std::to_string(p) + " monomial missed its norm at 1");
    }
  }
  return r;
}

inline std::vector<Tower> correspondence_towers(long long digits) {
  return {make_tower(2, 1, 1, digits), make_tower(3, 1, 1, digits),
          make_tower(3, 2, 1, 2 * digits), make_tower(5, 1, 1, digits)};
}

inline CorrespondenceConfig random_config(Rng& rng, const Tower& t, int g) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix l = Matrix::zero(t, 2 * g, g);
    for (int i = 0; i < 2 * g; ++i)
      for (int j = 0; j < g; ++j)
        l.at(i, j) = Element::from_integer(t, rng.range(0, t.p * t.p - 1));
    Matrix B = Matrix::zero(t, g, g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        B.at(i, j) = Element::from_integer(t, rng.range(0, t.p * t.p - 1));
    Rational alpha = Rational(1, t.p - 1) + Rational(1 + rng.range(0, 1));
    Rational beta = (alpha + Rational(1, t.p - 1)) / Rational(2);
    CorrespondenceConfig cfg(t, g, std::move(l), std::move(B), alpha, beta);
    try {
      Valuation dv = config_validate(cfg);
      // keep well-conditioned configurations so residual floors stay meaningful
      if (dv <= Valuation(Rational(2))) return cfg;
    } catch (const SingularConfig&) {
    }
  }
  throw Error("random_config: could not draw an invertible configuration");
}

inline void round_trip_case(CheckResult& r, Rng& rng,
                            const CorrespondenceConfig& cfg,
                            const Rational& floor_res) {
  const Tower& t = cfg.tower;
  Rational bound = Rational(2) * cfg.beta;
  std::vector<Element> z, theta;
  for (int i = 0; i < cfg.g; ++i) {
    z.push_back(rng.above(t, bound, false));
    theta.push_back(rng.above(t, bound, false));
  }
  ForwardResult fw = forward(z, theta, cfg);
  InverseResult bw = inverse(fw.rho, cfg);
  ++r.cases;
  for (int i = 0; i < cfg.g; ++i) {
    if ((bw.z[static_cast<size_t>(i)] - z[static_cast<size_t>(i)]).valuation() < Valuation(floor_res))
      r.fail(tower_tag(t) + " z not recovered");
    if ((bw.theta[static_cast<size_t>(i)] - theta[static_cast<size_t>(i)]).valuation() < Valuation(floor_res))
      r.fail(tower_tag(t) + " theta not recovered");
  }
  ForwardResult fw2 = forward(bw.z, bw.theta, cfg);
  for (size_t i = 0; i < fw.rho.size(); ++i)
    if ((fw2.rho[i] - fw.rho[i]).valuation() < Valuation(floor_res))
      r.fail(tower_tag(t) + " rho not reproduced");
}

inline CheckResult correspondence_round_trip(const CheckOptions& opt) {
  CheckResult r{"correspondence-round-trip"};
  Rng rng(opt.seed ^ 0x4001);
  Rational floor_res(opt.prec_digits - 8);
  for (const Tower& t : correspondence_towers(opt.prec_digits)) {
    CorrespondenceConfig def = default_config(t, 1);
    for (long long i = 0; i < opt.trials; ++i)
      round_trip_case(r, rng, def, floor_res);
    for (int c = 0; c < 4; ++c) {
      CorrespondenceConfig cfg = random_config(rng, t, 1 + static_cast<int>(rng.range(0, 1)));
      for (long long i = 0; i < std::max<long long>(opt.trials / 5, 1); ++i)
        round_trip_case(r, rng, cfg, floor_res);
    }
  }
  return r;
}

inline CheckResult forward_factorization(const CheckOptions& opt) {
  CheckResult r{"forward-factorization"};
  Rng rng(opt.seed ^ 0x4002);
  for (const Tower& t : correspondence_towers(opt.prec_digits)) {
    CorrespondenceConfig cfg = default_config(t, 2);
    Matrix M = correspondence_matrix(cfg);
    Rational bound = Rational(2) * cfg.beta;
    for (long long i = 0; i < opt.trials / 2 + 1; ++i) {
      std::vector<Element> z, theta, w;
      for (int k = 0; k < cfg.g; ++k) {
        z.push_back(rng.above(t, bound, false));
        theta.push_back(rng.above(t, bound, false));
      }
      std::vector<Element> zt = z;
      zt.insert(zt.end(), theta.begin(), theta.end());
      std::vector<Element> mw = mat_vec(M, zt);
      ForwardResult fw = forward(z, theta, cfg);
      ++r.cases;
      for (size_t k = 0; k < fw.rho.size(); ++k)
        if (!fw.rho[k].equals_at_precision(padic_exp(mw[k])))
          r.fail(tower_tag(t) + " product route != exp(M(z,theta)) route");
    }
  }
  return r;
}

inline CheckResult character_group_law(const CheckOptions& opt) {
  CheckResult r{"character-group-law"};
  Rng rng(opt.seed ^ 0x4003);
  Rational floor_res(opt.prec_digits - 8);
  for (const Tower& t : correspondence_towers(opt.prec_digits)) {
    CorrespondenceConfig cfg = default_config(t, 1);
    Rational bound = Rational(2) * cfg.beta;
    for (long long i = 0; i < opt.trials / 2 + 1; ++i) {
      std::vector<Element> z1{rng.above(t, bound, false)}, z2{rng.above(t, bound, false)};
      std::vector<Element> t1{rng.above(t, bound, false)}, t2{rng.above(t, bound, false)};
      ForwardResult a = forward(z1, t1, cfg);
      ForwardResult b = forward(z2, t2, cfg);
      ForwardResult s = forward({z1[0] + z2[0]}, {t1[0] + t2[0]}, cfg);
      ++r.cases;
      for (size_t k = 0; k < s.rho.size(); ++k)
        if ((s.rho[k] - a.rho[k] * b.rho[k]).valuation() < Valuation(floor_res))
          r.fail(tower_tag(t) + " group law residual too low");
    }
  }
  return r;
}

inline CheckResult linear_solve_residual(const CheckOptions& opt) {
  CheckResult r{"linear-solve-residual"};
  Rng rng(opt.seed ^ 0x4004);
  Rational floor_res(opt.prec_digits - 8);
  for (const Tower& t : correspondence_towers(opt.prec_digits)) {
    CorrespondenceConfig cfg = random_config(rng, t, 2);
    Matrix M = correspondence_matrix(cfg);
    Rational bound = Rational(2) * cfg.beta;
    for (long long i = 0; i < opt.trials / 2 + 1; ++i) {
      std::vector<Element> rho;
      for (int k = 0; k < 2 * cfg.g; ++k)
        rho.push_back(Element::one(t) + rng.above(t, bound, false));
      InverseResult bw = inverse(rho, cfg);
      std::vector<Element> s = bw.z;
      s.insert(s.end(), bw.theta.begin(), bw.theta.end());
      std::vector<Element> back = mat_vec(M, s);
      ++r.cases;
      for (int k = 0; k < 2 * cfg.g; ++k)
        if ((back[static_cast<size_t>(k)] - padic_log(rho[static_cast<size_t>(k)])).valuation() <
            Valuation(floor_res))
          r.fail(tower_tag(t) + " M*solution misses log(rho)");
    }
  }
  return r;
}

}  // namespace checks

inline std::vector<CheckResult> run_all_checks(const CheckOptions& opt) {
  std::vector<CheckResult> out{
      checks::ultrametric_addition(opt),
      checks::valuation_multiplicativity(opt),
      checks::inverse_round_trip(opt),
      checks::legendre_factorial_valuation(opt),
      checks::binomial_valuation_product_formula(opt),
      checks::classifier_term_oracle(opt),
      checks::exp_homomorphism(opt),
      checks::exp_log_round_trip(opt),
      checks::log_isometry(opt),
      checks::log_kills_torsion(opt),
      checks::pth_root_identity(opt),
      checks::stage1_overlap_consistency(opt),
      checks::stage1_obstruction_split(opt),
      checks::gauss_multiplicativity(opt),
      checks::gauss_triangle(opt),
      checks::sup_sample_bound(opt),
      checks::monomial_attainment(opt),
      checks::correspondence_round_trip(opt),
      checks::forward_factorization(opt),
      checks::character_group_law(opt),
      checks::linear_solve_residual(opt),
  };
  std::sort(out.begin(), out.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace padic
