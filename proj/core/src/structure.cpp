#include "zgraph/structure.hpp"

#include <algorithm>
#include <set>

#include "zgraph/primes.hpp"

namespace zgraph {

namespace {

ElemSet whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  for (int x = 0; x < g.order(); ++x) all[x] = x;
  return ElemSet{std::move(all), g.order(), true};
}

bool is_p_power_order(int o, std::int64_t p) {
  while (o % p == 0) o /= static_cast<int>(p);
  return o == 1;
}

void require_prime_divisor(const FiniteGroup& g, std::int64_t p) {
  if (!is_prime(p)) throw InvalidParameter("p must be prime");
  if (g.order() % p != 0)
    throw PrimeDoesNotDivide(std::to_string(p) + " does not divide " +
                             std::to_string(g.order()));
}

/// Add a subgroup to the collection if unseen; returns true when new.
struct SubgroupCollector {
  std::set<std::vector<int>> seen;
  std::vector<ElemSet> list;
  int cap;

  explicit SubgroupCollector(int cap) : cap(cap) {}

  bool add(ElemSet s) {
    if (!seen.insert(s.elements).second) return false;
    if (static_cast<int>(list.size()) >= cap)
      throw LatticeCapExceeded("subgroup collection exceeds " +
                               std::to_string(cap));
    list.push_back(std::move(s));
    return true;
  }

  /// Pairwise-join fixpoint: every new subgroup is joined with all earlier
  /// ones until nothing new appears.
  void close_under_joins(const FiniteGroup& g) {
    for (std::size_t i = 1; i < list.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (std::includes(list[i].elements.begin(), list[i].elements.end(),
                          list[j].elements.begin(), list[j].elements.end()))
          continue;
        std::vector<int> seed = list[i].elements;
        seed.insert(seed.end(), list[j].elements.begin(),
                    list[j].elements.end());
        add(closure(g, seed));
      }
    }
  }

  std::vector<ElemSet> sorted() && {
    std::sort(list.begin(), list.end(), [](const ElemSet& a, const ElemSet& b) {
      return a.size() != b.size() ? a.size() < b.size()
                                  : a.elements < b.elements;
    });
    return std::move(list);
  }
};

}  // namespace

ElemSet center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x)
      central = g.commutes(z, x);
    if (central) members.push_back(z);
  }
  return ElemSet{std::move(members), g.order(), true};
}

ElemSet centralizer(const FiniteGroup& g, int x) {
  std::vector<int> members;
  for (int y = 0; y < g.order(); ++y)
    if (g.commutes(x, y)) members.push_back(y);
  return ElemSet{std::move(members), g.order(), true};
}

ElemSet derived_subgroup(const FiniteGroup& g) {
  return derived_subgroup(g, whole_group(g));
}

ElemSet derived_subgroup(const FiniteGroup& g, const ElemSet& h) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> commutators;
  for (int x : h.elements)
    for (int y : h.elements) {
      const int c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!in[c]) {
        in[c] = 1;
        commutators.push_back(c);
      }
    }
  return closure(g, commutators);
}

bool is_solvable(const FiniteGroup& g) {
  ElemSet current = whole_group(g);
  while (true) {
    ElemSet next = derived_subgroup(g, current);
    if (next.size() == current.size()) return current.size() == 1;
    current = std::move(next);
  }
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int a = 0; a < g.order(); ++a) {
      const int y = g.conj(x, a);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_normal(const FiniteGroup& g, const ElemSet& s) {
  std::vector<char> in(g.order(), 0);
  for (int x : s.elements) in[x] = 1;
  for (int a = 0; a < g.order(); ++a)
    for (int x : s.elements)
      if (!in[g.conj(x, a)]) return false;
  return true;
}

std::vector<ElemSet> normal_subgroups(const FiniteGroup& g,
                                      const StructureOptions& opts) {
  SubgroupCollector coll(opts.lattice_cap);
  coll.add(closure(g, {}));
  for (const auto& cls : conjugacy_classes(g)) coll.add(closure(g, cls));
  coll.close_under_joins(g);
  return std::move(coll).sorted();
}

FiniteGroup quotient_group(const FiniteGroup& g, const ElemSet& n) {
  if (!n.subgroup || n.size() == 0 ||
      n.elements.front() != FiniteGroup::kIdentity)
    throw InvalidParameter("quotient_group: N is not a subgroup");
  for (int x : n.elements)
    for (int y : n.elements)
      if (!n.contains(g.mul(x, y)))
        throw InvalidParameter("quotient_group: N is not closed");
  if (!is_normal(g, n))
    throw NotNormal("quotient_group: N is not normal");

  const int order = g.order();
  std::vector<int> rep(order, -1);  // least element of each coset
  for (int x = 0; x < order; ++x) {
    int least = x;
    for (int u : n.elements) least = std::min(least, g.mul(x, u));
    rep[x] = least;
  }
  std::vector<int> coset_index(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x)
    if (rep[x] == x) {
      coset_index[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  const int m = static_cast<int>(reps.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      flat[static_cast<std::size_t>(a) * m + b] =
          coset_index[rep[g.mul(reps[a], reps[b])]];
  return FiniteGroup::from_generated_table(
      m, std::move(flat), g.name() + "/N" + std::to_string(n.size()));
}

ElemSet sylow_subgroup(const FiniteGroup& g, std::int64_t p) {
  require_prime_divisor(g, p);
  const std::int64_t target = p_part(g.order(), p);

  // seed: a p-element of maximal order
  int seed = FiniteGroup::kIdentity;
  for (int x = 0; x < g.order(); ++x)
    if (is_p_power_order(g.element_order(x), p) &&
        g.element_order(x) > g.element_order(seed))
      seed = x;
  ElemSet sylow = closure(g, {seed});

  while (sylow.size() < target) {
    std::vector<char> in(g.order(), 0);
    for (int x : sylow.elements) in[x] = 1;
    auto normalizes = [&](int y) {
      for (int x : sylow.elements)
        if (!in[g.conj(x, y)]) return false;
      return true;
    };
    int found = -1;
    for (int y = 0; y < g.order() && found < 0; ++y)
      if (!in[y] && is_p_power_order(g.element_order(y), p) && normalizes(y))
        found = y;
    if (found < 0)
      throw Error("sylow_subgroup: no extending element (table is not a group?)");
    std::vector<int> next = sylow.elements;
    next.push_back(found);
    sylow = closure(g, next);
  }
  return sylow;
}

bool is_z_group(const FiniteGroup& g) {
  for (std::int64_t p : prime_divisors(g.order())) {
    const std::int64_t part = p_part(g.order(), p);
    bool found = false;
    for (int x = 0; x < g.order() && !found; ++x)
      found = g.element_order(x) == part;
    if (!found) return false;
  }
  return true;
}

bool sylow_cyclic_or_generalized_quaternion(const FiniteGroup& g,
                                            std::int64_t p) {
  const ElemSet sylow = sylow_subgroup(g, p);
  std::int64_t count = 0;
  for (int x : sylow.elements)
    if (g.power(x, p) == FiniteGroup::kIdentity) ++count;
  return count == p;
}

bool is_nilpotent(const FiniteGroup& g) {
  for (std::int64_t p : prime_divisors(g.order()))
    if (!is_normal(g, sylow_subgroup(g, p))) return false;
  return true;
}

bool is_p_nilpotent(const FiniteGroup& g, std::int64_t p,
                    const StructureOptions& opts) {
  require_prime_divisor(g, p);
  const std::int64_t complement_order = g.order() / p_part(g.order(), p);
  for (const auto& n : normal_subgroups(g, opts))
    if (n.size() == complement_order) return true;
  return false;
}

FrobeniusResult is_frobenius(const FiniteGroup& g,
                             const StructureOptions& opts) {
  if (g.order() < 2) throw InvalidParameter("is_frobenius: trivial group");
  for (const auto& n : normal_subgroups(g, opts)) {
    if (n.size() <= 1 || n.size() >= g.order()) continue;
    bool kernel = true;
    for (std::size_t i = 1; i < n.elements.size() && kernel; ++i) {
      const int x = n.elements[i];
      for (int y = 0; y < g.order() && kernel; ++y)
        if (!n.contains(y) && g.commutes(x, y)) kernel = false;
    }
    if (kernel)
      return {true, n, static_cast<int>(g.order() / n.size())};
  }
  return {};
}

std::vector<ElemSet> all_subgroups(const FiniteGroup& g, int cap) {
  SubgroupCollector coll(cap);
  coll.add(closure(g, {}));
  for (int x = 1; x < g.order(); ++x) coll.add(closure(g, {x}));
  coll.close_under_joins(g);
  return std::move(coll).sorted();
}

FrobeniusResult frobenius_bruteforce_oracle(const FiniteGroup& g,
                                            const StructureOptions& opts) {
  if (g.order() > opts.frobenius_oracle_cap)
    throw OrderCapExceeded("frobenius_bruteforce_oracle: order " +
                           std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(opts.frobenius_oracle_cap));
  if (g.order() < 2) throw InvalidParameter("trivial group");

  for (const auto& h : all_subgroups(g, opts.lattice_cap)) {
    if (h.size() <= 1 || h.size() >= g.order()) continue;
    bool complement = true;
    for (int a = 0; a < g.order() && complement; ++a) {
      if (h.contains(a)) continue;
      // H n H^a must be trivial
      for (std::size_t i = 1; i < h.elements.size() && complement; ++i)
        if (h.contains(g.conj(h.elements[i], a))) complement = false;
    }
    if (!complement) continue;

    // kernel: identity plus everything outside every conjugate of H
    std::vector<char> covered(g.order(), 0);
    for (int a = 0; a < g.order(); ++a)
      for (std::size_t i = 1; i < h.elements.size(); ++i)
        covered[g.conj(h.elements[i], a)] = 1;
    std::vector<int> kernel_elems;
    for (int x = 0; x < g.order(); ++x)
      if (!covered[x]) kernel_elems.push_back(x);
    ElemSet kernel{std::move(kernel_elems), g.order(), false};
    bool closed = true;
    for (int x : kernel.elements)
      for (int y : kernel.elements)
        if (!kernel.contains(g.mul(x, y))) closed = false;
    kernel.subgroup = closed;
    return {true, std::move(kernel), h.size()};
  }
  return {};
}

}  // namespace zgraph
