#pragma once

#include <vector>

#include "padic/linalg.hpp"
#include "padic/series.hpp"

namespace padic {

/// Configuration of the rank-one correspondence: the genus, the 2g x g Lie
/// map l, the g x g lifting-dependent block B, and the smallness exponents
/// alpha (Higgs side) and beta (character side) tied by 2*beta = alpha + 1/(p-1).
struct CorrespondenceConfig {
  Tower tower;
  int g = 1;
  Matrix l;  // 2g x g
  Matrix B;  // g x g
  Rational alpha;
  Rational beta;

  CorrespondenceConfig(const Tower& t, int genus, Matrix l_matrix,
                       Matrix B_matrix, Rational a, Rational b)
      : tower(t), g(genus), l(std::move(l_matrix)), B(std::move(B_matrix)),
        alpha(a), beta(b) {}
};

/// l = [0; I], B = 0, alpha = 1/(p-1) + 1: the canonical invertible splitting
/// with the Higgs field feeding one block and the Picard log the other.
inline CorrespondenceConfig default_config(const Tower& t, int g = 1) {
  Matrix l = Matrix::zero(t, 2 * g, g);
  for (int i = 0; i < g; ++i) l.at(g + i, i) = Element::one(t);
  Matrix B = Matrix::zero(t, g, g);
  Rational alpha = Rational(1, t.p - 1) + Rational(1);
  Rational beta = (alpha + Rational(1, t.p - 1)) / Rational(2);
  return CorrespondenceConfig(t, g, std::move(l), std::move(B), alpha, beta);
}

/// The 2g x 2g block matrix M = [ l | J ] with J the g x g identity stacked
/// over B; forward is exp(M * (z (+) theta)).
inline Matrix correspondence_matrix(const CorrespondenceConfig& cfg) {
  int g = cfg.g;
  Matrix M = Matrix::zero(cfg.tower, 2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < g; ++j) M.at(i, j) = cfg.l.at(i, j);
  for (int i = 0; i < g; ++i) M.at(i, g + i) = Element::one(cfg.tower);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) M.at(g + i, g + j) = cfg.B.at(i, j);
  return M;
}

/// Checks the smallness exponents, the beta relation, and invertibility of M.
/// Returns the valuation of det(M) as the invertibility certificate.
inline Valuation config_validate(const CorrespondenceConfig& cfg) {
  const Tower& t = cfg.tower;
  if (cfg.g < 1) throw DimensionMismatch("config: genus must be >= 1");
  if (cfg.l.rows != 2 * cfg.g || cfg.l.cols != cfg.g)
    throw DimensionMismatch("config: l_matrix must be 2g x g");
  if (cfg.B.rows != cfg.g || cfg.B.cols != cfg.g)
    throw DimensionMismatch("config: B_matrix must be g x g");
  if (!(cfg.alpha > Rational(1, t.p - 1)))
    throw SmallnessViolation("config: alpha must exceed 1/(p-1) strictly");
  if (!(Rational(2) * cfg.beta == cfg.alpha + Rational(1, t.p - 1)))
    throw SmallnessViolation("config: 2*beta must equal alpha + 1/(p-1)");
  return det_valuation(correspondence_matrix(cfg));
}

inline bool is_small_higgs(const std::vector<Element>& theta,
                           const CorrespondenceConfig& cfg) {
  for (const Element& x : theta)
    if (x.valuation() < Valuation(cfg.alpha)) return false;
  return true;
}

inline bool is_small_character(const std::vector<Element>& rho,
                               const CorrespondenceConfig& cfg) {
  Valuation th(Rational(2) * cfg.beta);
  for (const Element& r : rho) {
    Element d = r - Element::one(cfg.tower, r.prec_pi());
    if (d.valuation() < th) return false;
  }
  return true;
}

/// theta -> (theta, B*theta): the Hodge-Tate pair with identity first
/// component and lifting-dependent second component.
inline std::vector<Element> beta_map(const std::vector<Element>& theta,
                                     const CorrespondenceConfig& cfg) {
  if (static_cast<int>(theta.size()) != cfg.g)
    throw DimensionMismatch("beta_map: theta must have g entries");
  std::vector<Element> out = theta;
  std::vector<Element> lower = mat_vec(cfg.B, theta);
  out.insert(out.end(), lower.begin(), lower.end());
  return out;
}

/// Componentwise exponential of beta_map(theta).
inline std::vector<Element> higgs_to_character(
    const std::vector<Element>& theta, const CorrespondenceConfig& cfg) {
  if (!is_small_higgs(theta, cfg))
    throw SmallnessViolation("higgs_to_character: v(theta) below alpha");
  std::vector<Element> w = beta_map(theta, cfg);
  std::vector<Element> out;
  out.reserve(w.size());
  for (const Element& x : w) out.push_back(padic_exp(x));
  return out;
}

/// Componentwise exponential of l*z; z is already a logarithm coordinate.
inline std::vector<Element> pic_to_character(
    const std::vector<Element>& z, const CorrespondenceConfig& cfg) {
  if (static_cast<int>(z.size()) != cfg.g)
    throw DimensionMismatch("pic_to_character: z must have g entries");
  std::vector<Element> w = mat_vec(cfg.l, z);
  std::vector<Element> out;
  out.reserve(w.size());
  for (const Element& x : w) {
    if (!classify(SeriesKind::Exp, cfg.tower.p, x.valuation()).converges)
      throw DomainError("pic_to_character: v((l*z)_i) = " +
                        x.valuation().to_string() + " not above 1/(p-1)");
    out.push_back(padic_exp(x));
  }
  return out;
}

struct ForwardResult {
  std::vector<Element> rho;
  std::vector<bool> meets_2beta;  // per component; misses are reported
  bool small = true;
};

/// forward(z, theta) = pic_to_character(z) (.) higgs_to_character(theta),
/// equal to exp(M * (z (+) theta)) by the homomorphism law.
inline ForwardResult forward(const std::vector<Element>& z,
                             const std::vector<Element>& theta,
                             const CorrespondenceConfig& cfg) {
  std::vector<Element> a = pic_to_character(z, cfg);
  std::vector<Element> b = higgs_to_character(theta, cfg);
  ForwardResult res;
  Valuation th(Rational(2) * cfg.beta);
  for (size_t i = 0; i < a.size(); ++i) {
    Element r = a[i] * b[i];
    Element d = r - Element::one(cfg.tower, r.prec_pi());
    bool ok = d.valuation() >= th;
    res.meets_2beta.push_back(ok);
    res.small = res.small && ok;
    res.rho.push_back(std::move(r));
  }
  return res;
}

struct InverseResult {
  std::vector<Element> z;
  std::vector<Element> theta;
};

/// Componentwise log, then solve M * (z (+) theta) = log(rho).
inline InverseResult inverse(const std::vector<Element>& rho,
                             const CorrespondenceConfig& cfg) {
  if (static_cast<int>(rho.size()) != 2 * cfg.g)
    throw DimensionMismatch("inverse: rho must have 2g entries");
  if (!is_small_character(rho, cfg))
    throw SmallnessViolation("inverse: v(rho_i - 1) below 2*beta");
  std::vector<Element> logs;
  logs.reserve(rho.size());
  for (const Element& r : rho) logs.push_back(padic_log(r));
  std::vector<Element> s = solve_linear(correspondence_matrix(cfg), logs);
  InverseResult res;
  res.z.assign(s.begin(), s.begin() + cfg.g);
  res.theta.assign(s.begin() + cfg.g, s.end());
  return res;
}

}  // namespace padic
