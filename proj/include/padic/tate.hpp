#pragma once

#include <map>
#include <vector>

#include "padic/element.hpp"

namespace padic {

using Monomial = std::vector<int>;  // exponent multi-index, length nvars

/// A finitely supported power series over K in nvars variables, the desk-scale
/// stand-in for the Tate algebra of restricted series on the unit polydisc.
/// Invariants: no stored coefficient is zero at precision; all coefficients
/// share one tower.
class RestrictedSeries {
 public:
  RestrictedSeries(const Tower& t, int nvars) : t_(t), nvars_(nvars) {
    if (nvars < 1) throw DimensionMismatch("series: nvars must be >= 1");
  }

  const Tower& tower() const { return t_; }
  int nvars() const { return nvars_; }
  const std::map<Monomial, Element>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Element& c) {
    if (static_cast<int>(m.size()) != nvars_)
      throw DimensionMismatch("series: exponent index length mismatch");
    for (int ei : m)
      if (ei < 0) throw DimensionMismatch("series: negative exponent");
    if (!t_.compatible(c.tower()))
      throw TowerMismatch("series: coefficient from a different tower");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero_at_precision()) terms_.emplace(m, c);
      return;
    }
    Element s = it->second + c;
    if (s.is_zero_at_precision())
      terms_.erase(it);
    else
      it->second = s;
  }

 private:
  Tower t_;
  int nvars_;
  std::map<Monomial, Element> terms_;
};

/// Gauss norm in valuation form: min over coefficients of v(c); the empty
/// series returns INFINITE.
inline Valuation gauss_norm(const RestrictedSeries& f) {
  Valuation best = Valuation::infinite();
  for (const auto& [m, c] : f.terms()) best = Valuation::min(best, c.valuation());
  return best;
}

inline RestrictedSeries series_add(const RestrictedSeries& f,
                                   const RestrictedSeries& g) {
  if (f.nvars() != g.nvars() || !f.tower().compatible(g.tower()))
    throw DimensionMismatch("series_add: shape mismatch");
  RestrictedSeries r = f;
  for (const auto& [m, c] : g.terms()) r.add_term(m, c);
  return r;
}

inline RestrictedSeries series_mul(const RestrictedSeries& f,
                                   const RestrictedSeries& g) {
  if (f.nvars() != g.nvars() || !f.tower().compatible(g.tower()))
    throw DimensionMismatch("series_mul: shape mismatch");
  RestrictedSeries r(f.tower(), f.nvars());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      Monomial m(mf.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = mf[i] + mg[i];
      r.add_term(m, cf * cg);
    }
  return r;
}

/// Evaluate at a point of the closed unit polydisc.
inline Element evaluate(const RestrictedSeries& f,
                        const std::vector<Element>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw DimensionMismatch("evaluate: point length mismatch");
  for (const Element& x : point)
    if (x.valuation() < Valuation(Rational(0)))
      throw OutOfBall("evaluate: coordinate with negative valuation");
  Element acc = Element::zero(f.tower(), f.tower().N * 4);
  for (const auto& [m, c] : f.terms()) {
    Element term = c;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * point[i].pow(static_cast<unsigned long long>(m[i]));
    acc = acc + term;
  }
  return acc;
}

/// Sampled sup-seminorm in valuation form: min over points of v(f(x)).
/// One-sided maximum-principle bound: never below gauss_norm(f).
inline Valuation sup_sample(const RestrictedSeries& f,
                            const std::vector<std::vector<Element>>& points) {
  Valuation best = Valuation::infinite();
  for (const auto& pt : points)
    best = Valuation::min(best, evaluate(f, pt).valuation());
  return best;
}

/// Membership in the Weierstrass domain X(f_1,...,f_r): |f_i(x)| <= 1 for
/// every i, i.e. valuation >= 0. The empty family accepts every point.
inline bool weierstrass_member(const std::vector<Element>& point,
                               const std::vector<RestrictedSeries>& fs) {
  for (const auto& f : fs) {
    Element v = evaluate(f, point);
    if (v.valuation() < Valuation(Rational(0))) return false;
  }
  return true;
}

/// The default coordinate sample values {0, 1, ..., p-1, p, 1+p}.
inline std::vector<Element> default_sample_values(const Tower& t,
                                                  long long prec_pi = -1) {
  std::vector<Element> vals;
  for (long long a = 0; a < t.p; ++a)
    vals.push_back(Element::from_integer(t, a, prec_pi));
  vals.push_back(Element::from_integer(t, t.p, prec_pi));
  vals.push_back(Element::from_integer(t, 1 + t.p, prec_pi));
  return vals;
}

/// All points of the polydisc grid values^nvars (nvars kept small by callers).
inline std::vector<std::vector<Element>> sample_grid(
    const std::vector<Element>& values, int nvars) {
  std::vector<std::vector<Element>> pts(1);
  for (int i = 0; i < nvars; ++i) {
    std::vector<std::vector<Element>> next;
    for (const auto& pt : pts)
      for (const auto& v : values) {
        auto q = pt;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace padic
