#pragma once

#include <vector>

#include "padic/element.hpp"

namespace padic {

/// Dense row-major matrix over K. Dimensions stay tiny (2g x 2g).
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Element> a;

  Matrix(int r, int c, const Element& fill)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}
  static Matrix zero(const Tower& t, int r, int c, long long prec_pi = -1) {
    return Matrix(r, c, Element::zero(t, prec_pi));
  }
  static Matrix identity(const Tower& t, int n, long long prec_pi = -1) {
    Matrix m = zero(t, n, n, prec_pi);
    for (int i = 0; i < n; ++i) m.at(i, i) = Element::one(t, prec_pi);
    return m;
  }

  Element& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Element& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

inline std::vector<Element> mat_vec(const Matrix& m,
                                    const std::vector<Element>& x) {
  if (static_cast<int>(x.size()) != m.cols)
    throw DimensionMismatch("mat_vec: size mismatch");
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    Element acc = Element::zero(m.at(i, 0).tower(), m.at(i, 0).tower().N * 4);
    for (int j = 0; j < m.cols; ++j) acc = acc + m.at(i, j) * x[j];
    out.push_back(acc);
  }
  return out;
}

namespace detail {

// Elimination with valuation-maximal pivoting (the pivot of minimal valuation
// maximizes the norm, retaining the most precision). Reduces in place; b may
// be null for a determinant-only pass. Returns the sum of pivot valuations.
inline Valuation eliminate(Matrix& m, std::vector<Element>* b,
                           std::vector<int>& colperm) {
  int n = m.rows;
  colperm.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) colperm[static_cast<size_t>(i)] = i;
  Valuation det_val(Rational(0));
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    Valuation best = Valuation::infinite();
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j) {
        Valuation v = m.at(i, j).valuation();
        if (!v.is_infinite() && (pr < 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0)
      throw SingularConfig("eliminate: matrix singular at working precision");
    if (pr != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pr, j));
      if (b) std::swap((*b)[static_cast<size_t>(k)], (*b)[static_cast<size_t>(pr)]);
    }
    if (pc != k) {
      for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, pc));
      std::swap(colperm[static_cast<size_t>(k)], colperm[static_cast<size_t>(pc)]);
    }
    det_val = det_val + best;
    Element pinv = m.at(k, k).inv();
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero_at_precision()) continue;
      Element f = m.at(i, k) * pinv;
      for (int j = k; j < n; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(k, j);
      if (b)
        (*b)[static_cast<size_t>(i)] =
            (*b)[static_cast<size_t>(i)] - f * (*b)[static_cast<size_t>(k)];
    }
  }
  return det_val;
}

}  // namespace detail

/// Valuation of det(m); throws SingularConfig when no nonzero pivot exists.
inline Valuation det_valuation(Matrix m) {
  std::vector<int> colperm;
  return detail::eliminate(m, nullptr, colperm);
}

/// Solve m * x = b by elimination with valuation-maximal pivoting.
inline std::vector<Element> solve_linear(Matrix m, std::vector<Element> b) {
  if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows)
    throw DimensionMismatch("solve_linear: shape mismatch");
  int n = m.rows;
  std::vector<int> colperm;
  detail::eliminate(m, &b, colperm);
  const Tower& t = m.at(0, 0).tower();
  std::vector<Element> y(static_cast<size_t>(n), Element::zero(t));
  for (int i = n - 1; i >= 0; --i) {
    Element acc = b[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      acc = acc - m.at(i, j) * y[static_cast<size_t>(j)];
    y[static_cast<size_t>(i)] = acc * m.at(i, i).inv();
  }
  std::vector<Element> x(static_cast<size_t>(n), Element::zero(t));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(colperm[static_cast<size_t>(i)])] = y[static_cast<size_t>(i)];
  return x;
}

}  // namespace padic
