#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "padic/errors.hpp"
#include "padic/rational.hpp"
#include "padic/tower.hpp"

namespace padic {

using boost::multiprecision::cpp_int;

inline long long ceil_div_ll(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline cpp_int pow_ll(long long base, long long exp) {
  cpp_int r = 1, b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline cpp_int mod_inverse(cpp_int a, const cpp_int& m) {
  cpp_int r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    cpp_int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw Error("mod_inverse: argument not invertible");
  return ((t0 % m) + m) % m;
}

/// One base-field coefficient, stored as sig * p^exp with the power of p split
/// out so that negative valuations (binomial coefficients, inverses) are
/// representable. Canonical form: sig == 0, or p does not divide sig.
struct Coeff {
  cpp_int sig;
  long long exp = 0;
};

/// An element of K = Q_p(pi): e base-field coefficients c_0..c_{e-1} with
/// x = sum c_i pi^i, reduced by pi^e = u*p, known modulo pi^{prec_pi}.
/// The Eisenstein layering gives v(c_i pi^i) = v_p(c_i) + i/e, so the layers
/// have distinct valuations mod 1 and v(x) is exact.
class Element {
 public:
  Element(const Tower& t, std::vector<Coeff> coeffs, long long prec_pi)
      : t_(t), c_(std::move(coeffs)), prec_(prec_pi) {
    c_.resize(static_cast<size_t>(t_.e));
    normalize();
  }

  static Element zero(const Tower& t, long long prec_pi = -1) {
    return Element(t, {}, prec_pi < 0 ? t.N : prec_pi);
  }
  static Element from_integer(const Tower& t, const cpp_int& n,
                              long long prec_pi = -1) {
    std::vector<Coeff> c(static_cast<size_t>(t.e));
    c[0].sig = n;
    return Element(t, std::move(c), prec_pi < 0 ? t.N : prec_pi);
  }
  static Element one(const Tower& t, long long prec_pi = -1) {
    return from_integer(t, 1, prec_pi);
  }
  static Element uniformizer(const Tower& t, long long prec_pi = -1) {
    std::vector<Coeff> c(static_cast<size_t>(t.e));
    if (t.e == 1) {
      c[0].sig = t.u;
      c[0].exp = 1;
    } else {
      c[1].sig = 1;
    }
    return Element(t, std::move(c), prec_pi < 0 ? t.N : prec_pi);
  }
  static Element from_rational(const Tower& t, const cpp_int& num,
                               const cpp_int& den, long long prec_pi = -1) {
    long long P = prec_pi < 0 ? t.N : prec_pi;
    long long d = 0;
    cpp_int dd = den;
    if (dd == 0) throw ZeroAtPrecision("from_rational: zero denominator");
    while (dd % t.p == 0) {
      dd /= t.p;
      ++d;
    }
    // headroom so the denominator's inverse never limits precision
    Element inv_den = from_integer(t, den, P + 2 * t.e * (d + 1) + 8).inv();
    return (from_integer(t, num, P + 2 * t.e * (d + 1) + 8) * inv_den)
        .truncated(P);
  }

  const Tower& tower() const { return t_; }
  long long prec_pi() const { return prec_; }
  Rational abs_prec() const { return Rational(prec_, t_.e); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  /// pi-adic valuation as an integer, or nullopt when zero at precision.
  std::optional<long long> pi_valuation() const {
    std::optional<long long> best;
    for (int i = 0; i < t_.e; ++i) {
      if (c_[static_cast<size_t>(i)].sig == 0) continue;
      long long v = c_[static_cast<size_t>(i)].exp * t_.e + i;
      if (!best || v < *best) best = v;
    }
    return best;
  }

  Valuation valuation() const {
    auto pv = pi_valuation();
    if (!pv) return Valuation::infinite();
    return Valuation(Rational(*pv, t_.e));
  }

  bool is_zero_at_precision() const { return !pi_valuation().has_value(); }

  Element operator+(const Element& o) const {
    require_compatible(o);
    long long P = std::min(prec_, o.prec_);
    std::vector<Coeff> out(static_cast<size_t>(t_.e));
    for (size_t i = 0; i < out.size(); ++i)
      out[i] = add_coeffs(c_[i], o.c_[i]);
    return Element(t_, std::move(out), P);
  }

  Element negated() const {
    Element r = *this;
    for (auto& co : r.c_) co.sig = -co.sig;
    r.normalize();
    return r;
  }

  Element operator-(const Element& o) const { return *this + o.negated(); }

  Element operator*(const Element& o) const {
    require_compatible(o);
    std::vector<Coeff> out(static_cast<size_t>(t_.e));
    for (int i = 0; i < t_.e; ++i) {
      if (c_[static_cast<size_t>(i)].sig == 0) continue;
      for (int j = 0; j < t_.e; ++j) {
        if (o.c_[static_cast<size_t>(j)].sig == 0) continue;
        int k = i + j;
        Coeff term{c_[static_cast<size_t>(i)].sig * o.c_[static_cast<size_t>(j)].sig,
                   c_[static_cast<size_t>(i)].exp + o.c_[static_cast<size_t>(j)].exp};
        if (k >= t_.e) {
          k -= t_.e;
          term.sig *= t_.u;
          term.exp += 1;
        }
        out[static_cast<size_t>(k)] = add_coeffs(out[static_cast<size_t>(k)], term);
      }
    }
    return Element(t_, std::move(out), mul_prec(o));
  }

  /// Exact integer scaling; the scalar carries no uncertainty of its own.
  Element scaled(const cpp_int& n) const {
    if (n == 0) return zero(t_, prec_);
    long long d = 0;
    cpp_int m = n;
    while (m % t_.p == 0) {
      m /= t_.p;
      ++d;
    }
    Element r = *this;
    for (auto& co : r.c_)
      if (co.sig != 0) co.sig *= n;
    r.prec_ += t_.e * d;
    r.normalize();
    return r;
  }

  /// Multiplicative inverse by Newton iteration on the unit part.
  /// abs_prec(1/x) = abs_prec(x) - 2*v(x): relative precision is preserved.
  Element inv() const {
    auto pv = pi_valuation();
    if (!pv) throw ZeroAtPrecision("inv: operand is zero at precision");
    long long m = *pv;
    long long rel = prec_ - m;  // > 0 for any nonzero element
    long long result_prec = prec_ - 2 * m;
    long long W = rel + 2 * t_.e + 8;

    Element unit = shift_pi(-m);
    unit.prec_ = W;  // exact digits beyond rel are provisional; truncated below
    unit.normalize();

    // unit has v = 0, so c_0 is a p-adic unit; seed with its inverse mod p
    long long r0 = static_cast<long long>(unit.c_[0].sig % t_.p);
    cpp_int z0 = mod_inverse(r0, t_.p);
    Element z = from_integer(t_, z0, W);
    Element two = from_integer(t_, 2, W + 2 * t_.e);
    for (long long correct = 1; correct < W; correct *= 2) {
      z = z * (two - unit * z);
      z.prec_ = W;
      z.normalize();
    }
    return z.shift_pi(-m).truncated(result_prec);
  }

  Element pow(unsigned long long n) const {
    Element r = one(t_, prec_ + 2 * t_.e);
    Element b = *this;
    while (n > 0) {
      if (n & 1ULL) r = r * b;
      n >>= 1ULL;
      if (n > 0) b = b * b;
    }
    return r;
  }

  /// Multiply by pi^k (k may be negative); precision shifts along exactly.
  Element shift_pi(long long k) const {
    Element r = *this;
    for (; k > 0; --k) r.rotate_up();
    for (; k < 0; ++k) r.rotate_down();
    r.normalize();
    return r;
  }

  /// Forget digits beyond prec_pi (never fabricates new ones).
  Element truncated(long long prec_pi) const {
    Element r = *this;
    r.prec_ = std::min(r.prec_, prec_pi);
    r.normalize();
    return r;
  }

  bool equals_at_precision(const Element& o) const {
    return (*this - o).is_zero_at_precision();
  }

  /// The residue of a Q_p element (e == 1) modulo p^k; requires v(x) >= 0.
  cpp_int residue(long long k) const {
    if (t_.e != 1) throw Error("residue: only defined for e = 1");
    const Coeff& co = c_[0];
    if (co.sig == 0) return 0;
    if (co.exp < 0) throw Error("residue: negative valuation");
    if (co.exp >= k) return 0;
    cpp_int m = pow_ll(t_.p, k);
    cpp_int v = co.sig * pow_ll(t_.p, co.exp) % m;
    return v < 0 ? v + m : v;
  }

 private:
  void require_compatible(const Element& o) const {
    if (!t_.compatible(o.t_))
      throw TowerMismatch("operands belong to different towers");
  }

  Coeff add_coeffs(const Coeff& a, const Coeff& b) const {
    if (a.sig == 0) return b;
    if (b.sig == 0) return a;
    long long vmin = std::min(a.exp, b.exp);
    Coeff r;
    r.exp = vmin;
    r.sig = a.sig * pow_ll(t_.p, a.exp - vmin) + b.sig * pow_ll(t_.p, b.exp - vmin);
    return r;
  }

  long long mul_prec(const Element& o) const {
    auto vx = pi_valuation();
    auto vy = o.pi_valuation();
    if (!vx && !vy) return prec_ + o.prec_;
    if (!vx) return prec_ + *vy;
    if (!vy) return o.prec_ + *vx;
    return std::min(prec_ + *vy, o.prec_ + *vx);
  }

  void rotate_up() {
    std::vector<Coeff> n(static_cast<size_t>(t_.e));
    for (int i = 1; i < t_.e; ++i) n[static_cast<size_t>(i)] = c_[static_cast<size_t>(i - 1)];
    Coeff top = c_[static_cast<size_t>(t_.e - 1)];
    if (top.sig != 0) {
      top.sig *= t_.u;
      top.exp += 1;
    }
    n[0] = top;
    c_ = std::move(n);
    prec_ += 1;
  }

  void rotate_down() {
    long long new_prec = prec_ - 1;
    std::vector<Coeff> n(static_cast<size_t>(t_.e));
    for (int i = 0; i + 1 < t_.e; ++i) n[static_cast<size_t>(i)] = c_[static_cast<size_t>(i + 1)];
    Coeff bot = c_[0];
    if (bot.sig != 0) {
      bot.exp -= 1;
      if (t_.u == -1) {
        bot.sig = -bot.sig;
      } else if (t_.u != 1) {
        // divide by the unit u modulo the digits this slot can still carry
        long long cap = ceil_div_ll(new_prec - (t_.e - 1), t_.e);
        long long L = cap - bot.exp;
        if (L > 0) {
          cpp_int mod = pow_ll(t_.p, L);
          bot.sig = bot.sig * mod_inverse(t_.u, mod) % mod;
        } else {
          bot.sig = 0;
          bot.exp = 0;
        }
      }
    }
    n[static_cast<size_t>(t_.e - 1)] = bot;
    c_ = std::move(n);
    prec_ = new_prec;
  }

  void normalize() {
    for (int i = 0; i < t_.e; ++i) {
      Coeff& co = c_[static_cast<size_t>(i)];
      while (true) {
        if (co.sig == 0) {
          co.exp = 0;
          break;
        }
        while (co.sig % t_.p == 0) {
          co.sig /= t_.p;
          ++co.exp;
        }
        long long cap = ceil_div_ll(prec_ - i, t_.e);
        if (co.exp >= cap) {
          co.sig = 0;
          co.exp = 0;
          break;
        }
        cpp_int mod = pow_ll(t_.p, cap - co.exp);
        co.sig %= mod;
        if (co.sig < 0) co.sig += mod;
        if (co.sig == 0) {
          co.exp = 0;
          break;
        }
        if (co.sig % t_.p != 0) break;  // canonical: continue stripping otherwise
      }
    }
  }

  Tower t_;
  std::vector<Coeff> c_;
  long long prec_;
};

}  // namespace padic
