#pragma once

// Slow, independent reference implementations used by the test suites and the
// CLI --selftest mode. Nothing here shares algorithmic machinery with the
// fast paths it checks: orders are found by successive multiplication,
// divisors by scanning, groups by exhaustive enumeration.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ordsum/arith.hpp"

namespace ordsum::testing {

// ord_n(a) by stepping a, a^2, a^3, ... (mod n).
inline uint64_t naive_mult_order(uint64_t a, uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1) throw std::domain_error("naive_mult_order: gcd != 1");
  uint64_t m = a % n;
  uint64_t r = 1;
  while (m != 1) {
    m = mulmod_u64(m, a % n, n);
    ++r;
  }
  return r;
}

// phi(n) by trial-division factorization, no sieve involved.
inline uint64_t trialdiv_phi(uint64_t n) {
  uint64_t phi = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      uint64_t pe = 1;
      while (n % p == 0) {
        n /= p;
        pe *= p;
      }
      phi *= pe - pe / p;
    }
  }
  if (n > 1) phi *= n - 1;
  return phi;
}

// Exponent of (Z/n)^x by brute force over all units.
inline uint64_t brute_carmichael(uint64_t n) {
  if (n == 1) return 1;
  std::vector<uint64_t> units;
  for (uint64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);
  for (uint64_t e = 1;; ++e) {
    bool all_one = true;
    for (uint64_t u : units)
      if (powmod_u64(u, e, n) != 1) {
        all_one = false;
        break;
      }
    if (all_one) return e;
  }
}

inline std::vector<uint64_t> brute_divisors_up_to(uint64_t n, uint64_t x) {
  std::vector<uint64_t> divs;
  for (uint64_t d = 1; d <= n && d <= x; ++d)
    if (n % d == 0) divs.push_back(d);
  return divs;
}

}  // namespace ordsum::testing
