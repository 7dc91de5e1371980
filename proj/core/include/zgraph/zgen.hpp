#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zgraph/group.hpp"

namespace zgraph {

/// Coprime metacyclic parameters presenting a Z-group as C_m x|_r C_n:
/// gcd(m, n) = 1, r^n = 1 (mod m), gcd(r - 1, m) = 1. The last condition
/// pins the C_m factor to the derived subgroup, which makes the form
/// canonical; m = 1 (the cyclic case) forces r = 1.
struct ZParams {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t r = 1;

  std::int64_t order() const { return m * n; }
  bool valid() const;
  std::string str() const;                    // "m:n:r"
  static ZParams parse(std::string_view text);

  friend bool operator==(const ZParams&, const ZParams&) = default;
};

/// One canonical representative per isomorphism class of Z-groups of order
/// N: all coprime splits N = m*n, all admissible r, deduplicated by the
/// orbit r -> r^j (gcd(j, n) = 1) and represented by the least r. Sorted by
/// (m, r).
std::vector<ZParams> enumerate_z_params(std::int64_t N);

/// Same scan without the orbit deduplication; used to cross-check the
/// canonical count against the isomorphism oracle.
std::vector<ZParams> enumerate_z_params_unreduced(std::int64_t N);

struct ZGenOptions {
  std::int64_t order_cap = 2'000;
};

/// The group on pairs (i, j) with (i, j)(i', j') = (i + r^j i' mod m,
/// j + j' mod n), flattened row-major with identity (0,0) at index 0.
FiniteGroup realize(const ZParams& params);

/// realize over enumerate_z_params(N); pairwise nonisomorphic Z-groups.
std::vector<FiniteGroup> z_groups_of_order(std::int64_t N,
                                           const ZGenOptions& opts = {});

struct IsoOptions {
  int order_cap = 255;
};

/// Brute-force isomorphism test: greedy generating set of a, images searched
/// among order-compatible tuples of b with closure-size pruning, full
/// homomorphism check at the leaves. Rejects immediately on order or
/// element-order-histogram mismatch.
bool isomorphism_oracle(const FiniteGroup& a, const FiniteGroup& b,
                        const IsoOptions& opts = {});

}  // namespace zgraph
