#pragma once

#include <string>

#include "padic/element.hpp"
#include "padic/formulas.hpp"

namespace padic {

enum class SeriesKind { Exp, Log, BinomialPthRoot };

inline const char* kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::Exp: return "exp";
    case SeriesKind::Log: return "log";
    case SeriesKind::BinomialPthRoot: return "binom";
  }
  return "?";
}

struct ConvergenceVerdict {
  bool converges;
  Rational threshold;  // strict lower bound on v(x)
  bool strict = true;
};

/// The strict convergence boundary of each series:
///   exp  : v > 1/(p-1)     (|x| < r_p)
///   log  : v > 0           (1-units)
///   root : v > p/(p-1)     (binomial p-th root of 1+x)
inline Rational convergence_threshold(SeriesKind kind, long long p) {
  switch (kind) {
    case SeriesKind::Exp: return Rational(1, p - 1);
    case SeriesKind::Log: return Rational(0);
    case SeriesKind::BinomialPthRoot: return Rational(p, p - 1);
  }
  return Rational(0);
}

inline ConvergenceVerdict classify(SeriesKind kind, long long p,
                                   const Valuation& v) {
  Rational th = convergence_threshold(kind, p);
  bool conv = v.is_infinite() || v.finite() > th;
  return ConvergenceVerdict{conv, th, true};
}

/// Exact valuation of the k-th series term when the argument has valuation v.
inline Valuation term_valuation(SeriesKind kind, long long p, long long k,
                                const Valuation& v) {
  if (v.is_infinite()) return Valuation::infinite();
  Rational vr = v.finite();
  switch (kind) {
    case SeriesKind::Exp:
      return Valuation(Rational(k) * vr - factorial_valuation(p, k));
    case SeriesKind::Log:
      return Valuation(Rational(k) * vr - Rational(int_valuation(p, k)));
    case SeriesKind::BinomialPthRoot:
      return Valuation(Rational(k) * (vr - Rational(p, p - 1)) +
                       Rational(digit_sum(p, k), p - 1));
  }
  return Valuation::infinite();
}

namespace detail {

inline long long series_headroom(const Tower& t, long long prec_pi) {
  // covers relative-precision loss from the integer inverses in term
  // recurrences (at most 2*e*v_p(k) per factor, v_p(k) <= 63 for any
  // machine-word index)
  return prec_pi + 2 * t.e * 66 + 32;
}

inline Element inv_integer(const Tower& t, long long k, long long prec_pi) {
  return Element::from_integer(t, k, prec_pi).inv();
}

}  // namespace detail

/// exp(x) = sum x^k / k!, defined for v(x) > 1/(p-1).
inline Element padic_exp(const Element& x) {
  const Tower& t = x.tower();
  Valuation v = x.valuation();
  if (!classify(SeriesKind::Exp, t.p, v).converges)
    throw DomainError("exp: argument valuation " + v.to_string() +
                      " not above the strict boundary 1/(p-1)");
  if (x.is_zero_at_precision()) return Element::one(t, x.prec_pi());

  Rational target(x.prec_pi(), t.e);
  Rational gap = v.finite() - Rational(1, t.p - 1);
  long long K = (target / gap).ceil();
  if (K < 1) K = 1;
  if (K > 200000) throw Error("exp: cutoff too large");

  long long cp = detail::series_headroom(t, x.prec_pi());
  Element sum = Element::one(t, cp);
  Element term = Element::one(t, cp);
  for (long long k = 1; k <= K; ++k) {
    term = term * x * detail::inv_integer(t, k, cp);
    sum = sum + term;
  }
  return sum.truncated(x.prec_pi());
}

/// log(x) = sum (-1)^{k+1} (x-1)^k / k, defined for v(x-1) > 0.
inline Element padic_log(const Element& x) {
  const Tower& t = x.tower();
  Element y = x - Element::one(t, x.prec_pi());
  Valuation w = y.valuation();
  if (!w.is_infinite() && !(w.finite() > Rational(0)))
    throw DomainError("log: argument is not a 1-unit (v(x-1) = " +
                      w.to_string() + ")");
  if (y.is_zero_at_precision()) return Element::zero(t, x.prec_pi());

  Rational target(x.prec_pi(), t.e);
  Rational wr = w.finite();
  // every index with v_p(k) <= 63 and k*w - 63 < target is included; the
  // omitted tail then has term valuation >= target
  long long K = ((target + Rational(63)) / wr).ceil();
  if (K < 1) K = 1;
  if (K > 200000) throw Error("log: cutoff too large");

  long long cp = detail::series_headroom(t, x.prec_pi());
  Element sum = Element::zero(t, cp);
  Element power = Element::one(t, cp);
  for (long long k = 1; k <= K; ++k) {
    power = power * y;
    Element term = power * detail::inv_integer(t, k, cp);
    if (k % 2 == 0) term = term.negated();
    sum = sum + term;
  }
  return sum.truncated(x.prec_pi());
}

/// (1+x)^{1/p} = sum C(1/p, k) x^k, defined for v(x) > p/(p-1). Returns the
/// distinguished root z with v(z - 1) = v(x) - 1 > 1/(p-1).
inline Element pth_root_binomial(const Element& x) {
  const Tower& t = x.tower();
  Valuation v = x.valuation();
  if (!classify(SeriesKind::BinomialPthRoot, t.p, v).converges)
    throw DomainError("pth_root_binomial: argument valuation " +
                      v.to_string() + " not above the strict boundary p/(p-1)");
  if (x.is_zero_at_precision()) return Element::one(t, x.prec_pi());

  Rational target(x.prec_pi(), t.e);
  Rational gap = v.finite() - Rational(t.p, t.p - 1);
  long long K = (target / gap).ceil();
  if (K < 1) K = 1;
  if (K > 200000) throw Error("pth_root_binomial: cutoff too large");

  long long cp = detail::series_headroom(t, x.prec_pi());
  Element sum = Element::one(t, cp);
  Element coeff = Element::one(t, cp);  // C(1/p, k) as an element of K
  Element power = Element::one(t, cp);
  for (long long k = 1; k <= K; ++k) {
    // C(1/p,k) = C(1/p,k-1) * (1 - (k-1)p) / (p*k)
    coeff = coeff.scaled(1 - (k - 1) * t.p) *
            detail::inv_integer(t, t.p * k, cp);
    power = power * x;
    sum = sum + coeff * power;
  }
  return sum.truncated(x.prec_pi());
}

/// Stage one of the extended exponential: y -> (1 + (exp(p*y) - 1))^{1/p},
/// a p-th root of exp(p*y). Defined whenever exp(p*y) converges; fails with
/// RootDomainError when exp(p*y) - 1 misses the binomial root domain, which
/// happens exactly when v(y) + 1 <= p/(p-1).
inline Element exp_extended_stage1(const Element& y) {
  const Tower& t = y.tower();
  Valuation v = y.valuation();
  Valuation inner = v + Valuation(Rational(1));
  if (!classify(SeriesKind::Exp, t.p, inner).converges)
    throw DomainError("exp_extended_stage1: exp(p*y) diverges (v(y)+1 = " +
                      inner.to_string() + ")");
  Element w = padic_exp(y.scaled(t.p));
  Element x = w - Element::one(t, w.prec_pi());
  if (!classify(SeriesKind::BinomialPthRoot, t.p, x.valuation()).converges)
    throw RootDomainError(
        "exp_extended_stage1: inner root diverges, v(exp(p*y)-1) = " +
        x.valuation().to_string() + " <= p/(p-1)");
  return pth_root_binomial(x);
}

}  // namespace padic
