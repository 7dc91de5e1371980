#include "zgraph/zgen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zgraph/primes.hpp"

namespace zgraph {

bool ZParams::valid() const {
  if (m < 1 || n < 1) return false;
  if (m == 1) return r == 1;
  if (r < 1 || r >= m) return false;
  if (std::gcd(m, n) != 1) return false;
  if (std::gcd(r, m) != 1) return false;
  if (pow_mod(r, n, m) != 1) return false;
  if (std::gcd(r - 1, m) != 1) return false;
  return true;
}

std::string ZParams::str() const {
  return std::to_string(m) + ":" + std::to_string(n) + ":" + std::to_string(r);
}

ZParams ZParams::parse(std::string_view text) {
  std::int64_t vals[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t colon = text.find(':', start);
    const bool last = i == 2;
    if (last != (colon == std::string_view::npos))
      throw ParseError("expected m:n:r");
    const std::string_view tok =
        text.substr(start, last ? std::string_view::npos : colon - start);
    std::int64_t v = 0;
    if (tok.empty()) throw ParseError("expected m:n:r");
    for (char c : tok) {
      if (c < '0' || c > '9') throw ParseError("bad integer in m:n:r");
      v = v * 10 + (c - '0');
    }
    vals[i] = v;
    start = colon + 1;
  }
  return {vals[0], vals[1], vals[2]};
}

namespace {

std::vector<std::int64_t> admissible_residues(std::int64_t m, std::int64_t n) {
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 2; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    if (pow_mod(r, n, m) != 1) continue;
    if (std::gcd(r - 1, m) != 1) continue;
    rs.push_back(r);
  }
  return rs;
}

std::int64_t orbit_min(std::int64_t r, std::int64_t m, std::int64_t n) {
  std::int64_t least = r;
  for (std::int64_t j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) least = std::min(least, pow_mod(r, j, m));
  return least;
}

}  // namespace

std::vector<ZParams> enumerate_z_params(std::int64_t N) {
  if (N < 1) throw InvalidParameter("enumerate_z_params: N must be >= 1");
  std::vector<ZParams> out;
  for (std::int64_t m : divisors(N)) {
    const std::int64_t n = N / m;
    if (std::gcd(m, n) != 1) continue;
    if (m == 1) {
      out.push_back({1, N, 1});
      continue;
    }
    for (std::int64_t r : admissible_residues(m, n))
      if (r == orbit_min(r, m, n)) out.push_back({m, n, r});
  }
  return out;  // divisors ascending, r ascending: sorted by (m, r)
}

std::vector<ZParams> enumerate_z_params_unreduced(std::int64_t N) {
  if (N < 1) throw InvalidParameter("enumerate_z_params: N must be >= 1");
  std::vector<ZParams> out;
  for (std::int64_t m : divisors(N)) {
    const std::int64_t n = N / m;
    if (std::gcd(m, n) != 1) continue;
    if (m == 1) {
      out.push_back({1, N, 1});
      continue;
    }
    for (std::int64_t r : admissible_residues(m, n)) out.push_back({m, n, r});
  }
  return out;
}

FiniteGroup realize(const ZParams& params) {
  if (!params.valid())
    throw InvalidParams("realize: invalid Zassenhaus parameters " +
                        params.str());
  const int m = static_cast<int>(params.m);
  const int n = static_cast<int>(params.n);
  const int order = m * n;
  std::vector<std::int64_t> rpow(n);
  rpow[0] = 1 % params.m;
  for (int j = 1; j < n; ++j) rpow[j] = rpow[j - 1] * params.r % params.m;

  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t row = static_cast<std::size_t>(i * n + j) * order;
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          flat[row + i2 * n + j2] =
              static_cast<int>((i + rpow[j] * i2) % m) * n + (j + j2) % n;
    }
  return FiniteGroup::from_generated_table(order, std::move(flat),
                                           "Z(" + params.str() + ")");
}

std::vector<FiniteGroup> z_groups_of_order(std::int64_t N,
                                           const ZGenOptions& opts) {
  if (N > opts.order_cap)
    throw OrderCapExceeded("z_groups_of_order: " + std::to_string(N) +
                           " exceeds cap " + std::to_string(opts.order_cap));
  std::vector<FiniteGroup> groups;
  for (const ZParams& params : enumerate_z_params(N))
    groups.push_back(realize(params));
  return groups;
}

namespace {

std::map<int, int> order_histogram(const FiniteGroup& g) {
  std::map<int, int> hist;
  for (int o : g.element_orders()) ++hist[o];
  return hist;
}

std::vector<int> greedy_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  ElemSet span = closure(g, {});
  while (span.size() < g.order()) {
    int best = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (span.contains(x)) continue;
      if (best < 0 || g.element_order(x) > g.element_order(best)) best = x;
    }
    gens.push_back(best);
    std::vector<int> seed = span.elements;
    seed.push_back(best);
    span = closure(g, seed);
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  const std::vector<int>& gens;
  std::vector<int> images;

  bool extend(std::size_t depth) {
    if (depth == gens.size()) return check_full();
    const int want_order = a.element_order(gens[depth]);
    for (int h = 0; h < b.order(); ++h) {
      if (b.element_order(h) != want_order) continue;
      images.push_back(h);
      if (prune_ok(depth + 1) && extend(depth + 1)) return true;
      images.pop_back();
    }
    return false;
  }

  bool prune_ok(std::size_t depth) const {
    // partial subgroups must match in size
    std::vector<int> sa(gens.begin(), gens.begin() + depth);
    std::vector<int> sb(images.begin(), images.begin() + depth);
    return closure(a, sa).size() == closure(b, sb).size();
  }

  bool check_full() const {
    // propagate the map by a breadth-first word construction, then verify
    // homomorphy on the whole table
    const int n = a.order();
    std::vector<int> phi(n, -1);
    phi[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
    std::vector<int> queue{FiniteGroup::kIdentity};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int y = a.mul(x, gens[k]);
        if (phi[y] < 0) {
          phi[y] = b.mul(phi[x], images[k]);
          queue.push_back(y);
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (phi[x] < 0) return false;  // gens do not generate (cannot happen)
      if (hit[phi[x]]) return false;
      hit[phi[x]] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    return true;
  }
};

}  // namespace

bool isomorphism_oracle(const FiniteGroup& a, const FiniteGroup& b,
                        const IsoOptions& opts) {
  if (a.order() > opts.order_cap || b.order() > opts.order_cap)
    throw OrderCapExceeded("isomorphism_oracle: order exceeds cap " +
                           std::to_string(opts.order_cap));
  if (a.order() != b.order()) return false;
  if (a.is_abelian() != b.is_abelian()) return false;
  if (order_histogram(a) != order_histogram(b)) return false;
  if (a.order() == 1) return true;

  const std::vector<int> gens = greedy_generating_set(a);
  IsoSearch search{a, b, gens, {}};
  search.images.reserve(gens.size());
  return search.extend(0);
}

}  // namespace zgraph
