#pragma once

#include "padic/rational.hpp"

namespace padic {

/// Sum of base-p digits of k.
inline long long digit_sum(long long p, long long k) {
  long long s = 0;
  for (; k > 0; k /= p) s += k % p;
  return s;
}

/// ord_p(k!) = (k - S_p(k)) / (p - 1). Always an integer (Legendre).
inline Rational factorial_valuation(long long p, long long k) {
  return Rational(k - digit_sum(p, k), p - 1);
}

/// v_p of the binomial coefficient C(1/p, k) = (S_p(k) - k*p) / (p - 1).
inline Rational binom_inv_p_valuation(long long p, long long k) {
  return Rational(digit_sum(p, k) - k * p, p - 1);
}

/// v_p(k) for integer k >= 1.
inline long long int_valuation(long long p, long long k) {
  long long v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

}  // namespace padic
