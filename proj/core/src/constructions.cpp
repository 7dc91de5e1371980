#include "zgraph/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

namespace zgraph {

namespace {

std::size_t idx(int n, int x, int y) {
  return static_cast<std::size_t>(x) * n + y;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidParameter("cyclic_group: n must be >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[idx(n, i, j)] = (i + j) % n;
  return FiniteGroup::from_generated_table(n, std::move(flat),
                                           "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InvalidParameter("dihedral_group: n must be >= 1");
  const int order = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  // s^f r^i * s^g r^j = s^(f xor g) r^(i*(-1)^g + j)
  for (int f = 0; f <= 1; ++f)
    for (int i = 0; i < n; ++i)
      for (int g = 0; g <= 1; ++g)
        for (int j = 0; j < n; ++j) {
          const int rot = g == 0 ? (i + j) % n : ((n - i) % n + j) % n;
          flat[idx(order, f * n + i, g * n + j)] = (f ^ g) * n + rot;
        }
  return FiniteGroup::from_generated_table(order, std::move(flat),
                                           "D" + std::to_string(n));
}

FiniteGroup dicyclic_group(int n) {
  if (n < 2) throw InvalidParameter("dicyclic_group: n must be >= 2");
  const int order = 4 * n;
  const int two = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  // indices: a^i -> i, b a^i -> 2n + i; b^2 = a^n, a b = b a^{-1}
  for (int i = 0; i < two; ++i)
    for (int j = 0; j < two; ++j) {
      flat[idx(order, i, j)] = (i + j) % two;
      flat[idx(order, i, two + j)] = two + ((j - i) % two + two) % two;
      flat[idx(order, two + i, j)] = two + (i + j) % two;
      flat[idx(order, two + i, two + j)] = ((n + j - i) % two + two) % two;
    }
  return FiniteGroup::from_generated_table(order, std::move(flat),
                                           "Dic" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  const int order = ng * nh;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int x1 = 0; x1 < ng; ++x1)
    for (int y1 = 0; y1 < nh; ++y1)
      for (int x2 = 0; x2 < ng; ++x2)
        for (int y2 = 0; y2 < nh; ++y2)
          flat[idx(order, x1 * nh + y1, x2 * nh + y2)] =
              g.mul(x1, x2) * nh + h.mul(y1, y2);
  return FiniteGroup::from_generated_table(order, std::move(flat),
                                           g.name() + "x" + h.name());
}

Permutation parse_cycles(std::string_view text, int min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int max_point = -1;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in cycle notation");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cycle.push_back(v);
      max_point = std::max(max_point, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }

  const int degree = std::max(min_degree, max_point + 1);
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (used[from])
        throw ParseError("point " + std::to_string(from) +
                         " appears in two cycles");
      used[from] = 1;
      perm[from] = cycle[(k + 1) % cycle.size()];
    }
  }
  return perm;
}

FiniteGroup from_permutation_generators(std::vector<Permutation> gens,
                                        std::string name,
                                        const GroupOptions& opts) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  if (degree == 0) degree = 1;
  for (auto& g : gens) {
    const std::size_t old = g.size();
    g.resize(degree);
    std::iota(g.begin() + old, g.end(), static_cast<int>(old));
    std::vector<char> hit(degree, 0);
    for (int img : g) {
      if (img < 0 || img >= static_cast<int>(degree) || hit[img])
        throw InvalidParameter("generator is not a permutation");
      hit[img] = 1;
    }
  }

  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t p = 0; p < degree; ++p) c[p] = b[a[p]];
    return c;
  };

  struct VecHash {
    std::size_t operator()(const Permutation& p) const {
      std::size_t h = p.size();
      for (int v : p) h = h * 1315423911u + static_cast<std::size_t>(v) + 1;
      return h;
    }
  };

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Permutation> elems{identity};
  std::unordered_map<Permutation, int, VecHash> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      Permutation next = compose(elems[i], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > opts.closure_cap)
          throw ClosureCapExceeded("permutation closure exceeds " +
                                   std::to_string(opts.closure_cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[idx(n, x, y)] = index.at(compose(elems[x], elems[y]));
  return FiniteGroup::from_generated_table(n, std::move(flat), std::move(name));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw InvalidParameter("symmetric_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(parse_cycles("(0 1)", n));
  if (n >= 3) {
    std::string cycle = "(";
    for (int i = 0; i < n; ++i) cycle += (i ? " " : "") + std::to_string(i);
    cycle += ")";
    gens.push_back(parse_cycles(cycle, n));
  }
  return from_permutation_generators(std::move(gens), "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1) throw InvalidParameter("alternating_group: n must be >= 1");
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(parse_cycles("(0 1 2)", n));
  if (n >= 4) {
    const int lo = n % 2 == 0 ? 1 : 0;  // even degree: cycle on n-1 points
    std::string cycle = "(";
    for (int i = lo; i < n; ++i) cycle += (i > lo ? " " : "") + std::to_string(i);
    cycle += ")";
    gens.push_back(parse_cycles(cycle, n));
  }
  return from_permutation_generators(std::move(gens), "A" + std::to_string(n));
}

FiniteGroup frobenius_group_20() {
  return from_permutation_generators(
      {parse_cycles("(0 1 2 3 4)"), parse_cycles("(1 2 4 3)", 5)}, "F20");
}

}  // namespace zgraph
