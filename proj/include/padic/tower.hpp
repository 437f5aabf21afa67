#pragma once

#include <string>

#include "padic/errors.hpp"

namespace padic {

inline bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The working field K = Q_p(pi) with pi^e = u*p, u a unit, plus the global
/// working precision N counted in pi-adic digits. e = 1 degenerates to Q_p
/// with pi = u*p. Valuations over K live in (1/e)*Z.
struct Tower {
  long long p = 2;
  int e = 1;
  long long u = 1;
  long long N = 40;  // absolute precision in pi-adic digits

  // Same field; N may differ between elements.
  bool compatible(const Tower& o) const {
    return p == o.p && e == o.e && u == o.u;
  }

  std::string to_string() const {
    return "Q_" + std::to_string(p) + "(pi), pi^" + std::to_string(e) + " = " +
           std::to_string(u) + "*" + std::to_string(p) +
           ", N=" + std::to_string(N);
  }
};

inline Tower make_tower(long long p, int e = 1, long long u = 1,
                        long long N = 40) {
  if (!is_prime_ll(p)) throw Error("tower: p must be prime, got " + std::to_string(p));
  if (e < 1) throw Error("tower: ramification index must be >= 1");
  if (u == 0 || ((u % p) + p) % p == 0)
    throw Error("tower: u must be a unit (coprime to p)");
  if (N < 1) throw Error("tower: precision must be >= 1");
  return Tower{p, e, u, N};
}

}  // namespace padic
