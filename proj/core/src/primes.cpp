#include "zgraph/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgraph {

std::int64_t PrimeFactorization::value() const {
  std::int64_t v = 1;
  for (const auto& t : terms)
    for (int i = 0; i < t.e; ++i) v *= t.p;
  return v;
}

bool PrimeFactorization::has_prime(std::int64_t p) const {
  return std::any_of(terms.begin(), terms.end(),
                     [&](const Term& t) { return t.p == p; });
}

PrimeFactorization factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  PrimeFactorization f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.terms.push_back({p, e});
    }
  }
  if (n > 1) f.terms.push_back({n, 1});
  return f;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (const auto& t : factorize(n).terms) ps.push_back(t.p);
  return ps;
}

std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod < 1) throw std::invalid_argument("pow_mod: mod must be positive");
  if (mod == 1) return 0;
  std::int64_t result = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = mod, new_r = a % mod;
  if (new_r < 0) new_r += mod;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not coprime");
  return t < 0 ? t + mod : t;
}

}  // namespace zgraph
