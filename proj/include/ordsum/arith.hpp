#pragma once

// Exact integer arithmetic: factorization, multiplicative functions,
// Carmichael lambda and multiplicative orders. Everything is deterministic;
// the only failure mode is a work-budget error on inputs that are too hard,
// never a wrong answer.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordsum {

// Raised when a computation exceeds its configured work budget. Distinct from
// domain errors so callers can retry with a larger budget.
class work_budget_error : public std::runtime_error {
 public:
  explicit work_budget_error(const std::string& what) : std::runtime_error(what) {}
};

class precision_exhausted_error : public std::runtime_error {
 public:
  explicit precision_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Multiset of (prime, exponent) pairs, ascending by prime. The empty list is 1.
struct Factorization {
  std::vector<PrimePower> factors;

  mpz_class value() const {
    mpz_class v = 1;
    for (const auto& pp : factors) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
      v *= pe;
    }
    return v;
  }
  bool operator==(const Factorization&) const = default;
};

inline constexpr uint32_t kSmallPrimeBound = 1'000'000;

// Primes below kSmallPrimeBound; built on first use, read-only afterwards.
inline const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    std::vector<bool> sieve(kSmallPrimeBound, true);
    sieve[0] = sieve[1] = false;
    for (uint64_t i = 2; i * i < kSmallPrimeBound; ++i)
      if (sieve[i])
        for (uint64_t j = i * i; j < kSmallPrimeBound; j += i) sieve[j] = false;
    std::vector<uint32_t> out;
    out.reserve(78498);
    for (uint32_t i = 2; i < kSmallPrimeBound; ++i)
      if (sieve[i]) out.push_back(i);
    return out;
  }();
  return primes;
}

// Smallest-prime-factor table for 0..x (spf[0] = spf[1] = 0).
inline std::vector<uint32_t> spf_sieve(uint32_t x) {
  std::vector<uint32_t> spf(static_cast<size_t>(x) + 1, 0);
  for (uint64_t i = 2; i <= x; ++i) {
    if (spf[i] == 0)
      for (uint64_t j = i; j <= x; j += i)
        if (spf[j] == 0) spf[j] = static_cast<uint32_t>(i);
  }
  return spf;
}

// omega[n] = number of distinct prime factors of n, for 0 <= n <= x.
inline std::vector<uint8_t> omega_sieve(uint64_t x) {
  if (x > (uint64_t(1) << 31))
    throw work_budget_error("omega_sieve: range too large");
  std::vector<uint8_t> omega(x + 1, 0);
  for (uint64_t p = 2; p <= x; ++p) {
    if (omega[p] == 0)  // p prime
      for (uint64_t j = p; j <= x; j += p) ++omega[j];
  }
  return omega;
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace detail {

// Largest n for which the 12-base Miller-Rabin set below is proven exhaustive
// (Sorenson-Webster). Everything this library factors stays well under it.
inline const mpz_class& mr_proven_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

inline bool miller_rabin_witness(const mpz_class& n, const mpz_class& a) {
  // returns true if a witnesses n composite
  mpz_class nm1 = n - 1;
  unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
  mpz_class d = nm1 >> s;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == nm1) return false;
  }
  return true;
}

}  // namespace detail

// Deterministic primality test, exact for n < 3.3e24 (~2^81). A composite
// verdict is certified at any size (a Miller-Rabin witness is a proof);
// a "prime" verdict above the proven bound cannot be certified and raises
// work_budget_error rather than risk a wrong answer.
inline bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 41 * 41) return true;
  for (unsigned p : small)
    if (detail::miller_rabin_witness(n, mpz_class(p))) return false;
  if (n >= detail::mr_proven_bound())
    throw work_budget_error("is_prime: cannot certify primality beyond ~2^81");
  return true;
}

namespace detail {

// Pollard-Brent rho with a deterministic parameter sequence. Finds a
// nontrivial factor of odd composite n; decrements `budget` as it works.
inline mpz_class pollard_brent(const mpz_class& n, uint64_t& budget) {
  for (uint64_t c = 1;; ++c) {
    mpz_class y = 2, r = 1, q = 1, g = 1, x, ys;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = m;
        if (r - k < lim) lim = mpz_get_ui(mpz_class(r - k).get_mpz_t());
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        if (budget < lim) throw work_budget_error("factor: work budget exhausted");
        budget -= lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (budget == 0) throw work_budget_error("factor: work budget exhausted");
        --budget;
      } while (g == 1);
    }
    if (g != n) return g;
    // cycle degenerated for this c; try the next parameter
  }
}

inline void factor_into(const mpz_class& n, std::vector<PrimePower>& out, uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back({n, 1});
    return;
  }
  mpz_class d = pollard_brent(n, budget);
  factor_into(d, out, budget);
  factor_into(n / d, out, budget);
}

}  // namespace detail

inline constexpr uint64_t kDefaultFactorBudget = 200'000'000;

inline Factorization factor(const mpz_class& n, uint64_t work_budget = kDefaultFactorBudget) {
  if (n < 1) throw std::domain_error("factor: n must be >= 1");
  Factorization f;
  mpz_class m = n;
  for (uint32_t p : small_primes()) {
    if (mpz_class(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      f.factors.push_back({mpz_class(p), e});
    }
  }
  if (m > 1) {
    std::vector<PrimePower> rest;
    detail::factor_into(m, rest, work_budget);
    std::sort(rest.begin(), rest.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    // merge equal primes from independent rho splits
    for (auto& pp : rest) {
      if (!f.factors.empty() && f.factors.back().prime == pp.prime)
        f.factors.back().exponent += pp.exponent;
      else
        f.factors.push_back(std::move(pp));
    }
  }
  return f;
}

inline mpz_class euler_phi(const mpz_class& n) {
  Factorization f = factor(n);
  mpz_class phi = 1;
  for (const auto& pp : f.factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
    phi *= pe * (pp.prime - 1);
  }
  return phi;
}

// Exponent of (Z/n)^x: lcm of the cyclic component exponents, with the usual
// split for powers of 2.
inline mpz_class carmichael_lambda(const mpz_class& n) {
  if (n < 1) throw std::domain_error("carmichael_lambda: n must be >= 1");
  Factorization f = factor(n);
  mpz_class lambda = 1;
  for (const auto& pp : f.factors) {
    mpz_class comp;
    if (pp.prime == 2) {
      if (pp.exponent == 1) comp = 1;
      else if (pp.exponent == 2) comp = 2;
      else {
        comp = 1;
        mpz_mul_2exp(comp.get_mpz_t(), comp.get_mpz_t(), pp.exponent - 2);
      }
    } else {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
      comp = pe * (pp.prime - 1);
    }
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), comp.get_mpz_t());
  }
  return lambda;
}

struct OrderQuery {
  mpz_class base;
  mpz_class modulus;

  OrderQuery(mpz_class a, mpz_class n) : base(std::move(a)), modulus(std::move(n)) {
    if (base < 2) throw std::domain_error("OrderQuery: base must be >= 2");
    if (modulus < 1) throw std::domain_error("OrderQuery: modulus must be >= 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), base.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) throw std::domain_error("OrderQuery: base and modulus must be coprime");
  }
};

// Smallest r >= 1 with g^r = identity, given a multiple `mult` of the order
// and its factorization. `power_is_identity(e)` must evaluate g^e == id.
template <typename PowerIsIdentity>
mpz_class order_from_multiple(const mpz_class& mult, const Factorization& mult_factors,
                              PowerIsIdentity&& power_is_identity) {
  mpz_class r = mult;
  for (const auto& pp : mult_factors.factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (!mpz_divisible_p(r.get_mpz_t(), pp.prime.get_mpz_t())) break;
      mpz_class cand = r / pp.prime;
      if (power_is_identity(cand))
        r = cand;
      else
        break;
    }
  }
  return r;
}

// ord_n(a) by lambda-descent: factor lambda(n) and strip primes while the
// congruence a^r = 1 (mod n) persists. Never a scan from 1.
inline mpz_class mult_order(const OrderQuery& q) {
  if (q.modulus == 1) return 1;
  mpz_class lambda = carmichael_lambda(q.modulus);
  Factorization lf = factor(lambda);
  return order_from_multiple(lambda, lf, [&](const mpz_class& e) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), q.base.get_mpz_t(), e.get_mpz_t(), q.modulus.get_mpz_t());
    return x == 1;
  });
}

struct MuOmegaTau {
  int mu = 0;
  unsigned omega = 0;
  uint64_t tau = 0;
  bool operator==(const MuOmegaTau&) const = default;
};

inline MuOmegaTau mu_omega_tau(const mpz_class& n) {
  Factorization f = factor(n);
  MuOmegaTau r;
  r.omega = static_cast<unsigned>(f.factors.size());
  r.tau = 1;
  bool squarefree = true;
  for (const auto& pp : f.factors) {
    r.tau *= pp.exponent + 1;
    if (pp.exponent > 1) squarefree = false;
  }
  r.mu = squarefree ? (r.omega % 2 == 0 ? 1 : -1) : 0;
  return r;
}

// All divisors d <= x of the factored integer, ascending.
inline std::vector<mpz_class> divisors_up_to(const Factorization& f, const mpz_class& x) {
  if (x < 1) throw std::domain_error("divisors_up_to: x must be >= 1");
  std::vector<mpz_class> divs{1};
  for (const auto& pp : f.factors) {
    size_t prev = divs.size();
    mpz_class pe = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pe *= pp.prime;
      if (pe > x) break;
      for (size_t i = 0; i < prev; ++i) {
        mpz_class d = divs[i] * pe;
        if (d <= x) divs.push_back(d);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace ordsum
