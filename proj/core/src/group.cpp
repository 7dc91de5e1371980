#include "zgraph/group.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "zgraph/primes.hpp"

namespace zgraph {

namespace {

std::string at(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void check_latin(int n, const std::vector<int>& flat) {
  std::vector<char> seen(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = flat[static_cast<std::size_t>(x) * n + y];
      if (v < 0 || v >= n)
        throw NotLatinSquare("entry out of range at " + at(x, y));
      if (seen[v])
        throw NotLatinSquare("row " + std::to_string(x) + " repeats value " +
                             std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = flat[static_cast<std::size_t>(x) * n + y];
      if (seen[v])
        throw NotLatinSquare("column " + std::to_string(y) +
                             " repeats value " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

int find_identity(int n, const std::vector<int>& flat) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = flat[static_cast<std::size_t>(e) * n + x] == x &&
           flat[static_cast<std::size_t>(x) * n + e] == x;
    if (ok) return e;
  }
  return -1;
}

}  // namespace

FiniteGroup FiniteGroup::build(int n, std::vector<int> flat, std::string name,
                               bool full_assoc_scan, const GroupOptions& opts) {
  check_latin(n, flat);

  int e = find_identity(n, flat);
  if (e < 0) throw NoIdentity("no two-sided identity element");
  if (e != 0) {
    // relabel by the transposition (0 e)
    auto relabel = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<int> fixed(flat.size());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        fixed[static_cast<std::size_t>(relabel(x)) * n + relabel(y)] =
            relabel(flat[static_cast<std::size_t>(x) * n + y]);
    flat = std::move(fixed);
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);

  g.inverses_.resize(n);
  for (int x = 0; x < n; ++x) {
    int y = 0;
    while (g.mul(x, y) != kIdentity) ++y;  // Latin row guarantees a hit
    if (g.mul(y, x) != kIdentity)
      throw NotAssociative("right inverse of " + std::to_string(x) +
                           " is not a left inverse");
    g.inverses_[x] = y;
  }

  g.orders_.resize(n);
  for (int x = 0; x < n; ++x) {
    int k = 1, w = x;
    while (w != kIdentity) {
      w = g.mul(w, x);
      ++k;
    }
    g.orders_[x] = k;
    if (n % k != 0)
      throw NotAssociative("element " + std::to_string(x) + " has order " +
                           std::to_string(k) + ", which does not divide " +
                           std::to_string(n));
  }

  auto assoc_at = [&](int x, int y, int z) {
    if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
      throw NotAssociative("associativity fails at (" + std::to_string(x) +
                           "," + std::to_string(y) + "," + std::to_string(z) +
                           ")");
  };
  if (full_assoc_scan) {
    if (n <= opts.assoc_full_bound) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) assoc_at(x, y, z);
    } else {
      std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(n) << 20));
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int i = 0; i < opts.assoc_spot_samples; ++i)
        assoc_at(pick(rng), pick(rng), pick(rng));
    }
  }

  g.abelian_ = true;
  for (int x = 1; x < n && g.abelian_; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        g.abelian_ = false;
        break;
      }
  return g;
}

FiniteGroup FiniteGroup::from_cayley_table(
    const std::vector<std::vector<int>>& table, std::string name,
    const GroupOptions& opts) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidParameter("empty Cayley table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidParameter("Cayley table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build(n, std::move(flat), std::move(name), /*full_assoc_scan=*/true,
               opts);
}

FiniteGroup FiniteGroup::from_generated_table(int n, std::vector<int> flat,
                                              std::string name) {
  if (n < 1 || flat.size() != static_cast<std::size_t>(n) * n)
    throw InvalidParameter("generated table has wrong shape");
  return build(n, std::move(flat), std::move(name), /*full_assoc_scan=*/false,
               GroupOptions{});
}

int FiniteGroup::power(int x, std::int64_t k) const {
  const int o = orders_[x];
  k %= o;
  if (k < 0) k += o;
  int result = kIdentity;
  int base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::renamed(std::string new_name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(new_name);
  return g;
}

bool ElemSet::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

ElemSet closure(const FiniteGroup& g, std::span<const int> seed) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  push(FiniteGroup::kIdentity);
  for (int s : seed) {
    if (s < 0 || s >= n) throw InvalidParameter("closure: element out of range");
    push(s);
  }
  // every word in the seed appears as some member * seed element
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : seed) push(g.mul(members[i], s));
  std::sort(members.begin(), members.end());
  return ElemSet{std::move(members), n, true};
}

ElemSet closure(const FiniteGroup& g, std::initializer_list<int> seed) {
  return closure(g, std::span<const int>(seed.begin(), seed.size()));
}

bool is_cyclic(const FiniteGroup& g, const ElemSet& subgroup) {
  for (int x : subgroup.elements)
    if (g.element_order(x) == subgroup.size()) return true;
  return false;
}

bool cyclic_pair(const FiniteGroup& g, int x, int y) {
  if (!g.commutes(x, y)) return false;
  return is_cyclic(g, closure(g, {x, y}));
}

bool cyclic_pair_naive(const FiniteGroup& g, int x, int y) {
  return is_cyclic(g, closure(g, {x, y}));
}

std::map<std::int64_t, int> primary_decomposition(const FiniteGroup& g, int x) {
  if (x == FiniteGroup::kIdentity)
    throw IdentityElement("primary_decomposition: identity has no primary parts");
  const std::int64_t o = g.element_order(x);
  std::map<std::int64_t, int> parts;
  for (const auto& term : factorize(o).terms) {
    std::int64_t pe = 1;
    for (int i = 0; i < term.e; ++i) pe *= term.p;
    const std::int64_t rest = o / pe;
    // k = 1 mod p^e, k = 0 mod o/p^e
    const std::int64_t k = rest == 1 ? 1 : rest * mod_inverse(rest % pe, pe);
    parts[term.p] = g.power(x, k);
  }
  return parts;
}

}  // namespace zgraph
