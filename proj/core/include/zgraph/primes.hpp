#pragma once

#include <cstdint>
#include <vector>

namespace zgraph {

/// Prime-power factorization of a positive integer, terms sorted by prime.
struct PrimeFactorization {
  struct Term {
    std::int64_t p;
    int e;
  };
  std::vector<Term> terms;

  std::int64_t value() const;
  bool has_prime(std::int64_t p) const;
};

/// Trial-division factorization. Requires n >= 1; factorize(1) has no terms.
PrimeFactorization factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// Largest power of p dividing n (the p-part |n|_p). Requires p >= 2.
std::int64_t p_part(std::int64_t n, std::int64_t p);

bool is_prime(std::int64_t n);

/// All positive divisors of n in ascending order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// base^exp mod mod. Requires mod >= 1; returns 0 when mod == 1.
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Multiplicative inverse of a mod mod; requires gcd(a, mod) == 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);

}  // namespace zgraph
