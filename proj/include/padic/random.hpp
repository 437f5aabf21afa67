#pragma once

#include <random>
#include <vector>

#include "padic/element.hpp"
#include "padic/tate.hpp"

namespace padic {

/// Seeded deterministic generator for property suites; mt19937_64 has a fixed
/// algorithm, so identical seeds reproduce identical streams everywhere.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  unsigned long long below(unsigned long long n) { return eng_() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<unsigned long long>(hi - lo + 1)));
  }

  /// A unit of the tower (valuation exactly 0) at precision prec_pi.
  Element unit(const Tower& t, long long prec_pi = -1) {
    long long P = prec_pi < 0 ? t.N : prec_pi;
    std::vector<Coeff> c(static_cast<size_t>(t.e));
    for (int i = 0; i < t.e; ++i) {
      long long cap = ceil_div_ll(P - i, t.e);
      if (cap <= 0) continue;
      cpp_int s = 0;
      for (long long d = 0; d < cap; ++d)
        s = s * t.p + static_cast<long long>(below(static_cast<unsigned long long>(t.p)));
      c[static_cast<size_t>(i)].sig = s;
    }
    // force the i = 0 layer to be a unit
    cpp_int lead = 1 + static_cast<long long>(below(static_cast<unsigned long long>(t.p - 1)));
    c[0].sig = c[0].sig - (c[0].sig % t.p) + lead;
    return Element(t, std::move(c), P);
  }

  /// Element with pi-adic valuation exactly m at the tower's working precision.
  Element with_pi_valuation(const Tower& t, long long m) {
    return unit(t, t.N - m).shift_pi(m);
  }

  /// Element with valuation >= bound (strictly above when strict), valuation
  /// drawn from the first `spread` lattice points.
  Element above(const Tower& t, const Rational& bound, bool strict,
                long long spread = 4) {
    long long m0 = (bound * Rational(t.e)).floor() - 1;
    do {
      ++m0;
    } while (strict ? !(Rational(m0, t.e) > bound) : Rational(m0, t.e) < bound);
    return with_pi_valuation(t, m0 + range(0, spread - 1));
  }

  RestrictedSeries series(const Tower& t, int nvars, int max_terms,
                          int max_deg) {
    RestrictedSeries f(t, nvars);
    long long n = range(1, max_terms);
    for (long long k = 0; k < n; ++k) {
      Monomial m(static_cast<size_t>(nvars));
      for (auto& ei : m) ei = static_cast<int>(range(0, max_deg));
      f.add_term(m, with_pi_valuation(t, range(0, 3)));
    }
    return f;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace padic
