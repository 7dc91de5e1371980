#include <doctest.h>

#include <numeric>
#include <random>

#include "zgraph/constructions.hpp"
#include "zgraph/graph.hpp"
#include "zgraph/structure.hpp"
#include "zgraph/verifier.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

namespace {

std::vector<FiniteGroup> sample_corpus() {
  std::vector<FiniteGroup> corpus = {
      cyclic_group(6),
      cyclic_group(16),
      cyclic_group(30),
      dihedral_group(3),
      dihedral_group(6),
      dihedral_group(9),
      dicyclic_group(2),
      dicyclic_group(3),
      dicyclic_group(4),
      direct_product(cyclic_group(2), cyclic_group(2)),
      direct_product(dicyclic_group(2), cyclic_group(3)),
      symmetric_group(4),
      alternating_group(4),
      frobenius_group_20(),
      realize({7, 3, 2}),
      realize({15, 4, 2}),
      realize({5, 12, 2}),
  };
  return corpus;
}

}  // namespace

TEST_CASE("adjacency implies commuting; coprime commuting implies adjacency") {
  std::mt19937_64 rng(7);
  for (const FiniteGroup& g : sample_corpus()) {
    const Graph delta = cyclic_graph(g);
    std::uniform_int_distribution<int> pick(1, g.order() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const int x = pick(rng), y = pick(rng);
      if (x == y) continue;
      const bool adj = delta.adjacent(delta.position(x), delta.position(y));
      if (adj) CHECK(g.commutes(x, y));
      if (g.commutes(x, y) &&
          std::gcd(g.element_order(x), g.element_order(y)) == 1)
        CHECK(adj);
    }
  }
}

TEST_CASE("conjugation preserves adjacency") {
  std::mt19937_64 rng(11);
  for (const FiniteGroup& g : sample_corpus()) {
    const Graph delta = cyclic_graph(g);
    std::uniform_int_distribution<int> nonident(1, g.order() - 1);
    std::uniform_int_distribution<int> any(0, g.order() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const int x = nonident(rng), y = nonident(rng), a = any(rng);
      if (x == y) continue;
      CHECK(delta.adjacent(delta.position(x), delta.position(y)) ==
            delta.adjacent(delta.position(g.conj(x, a)),
                           delta.position(g.conj(y, a))));
    }
  }
}

TEST_CASE("downward closure: powers of an adjacent pair stay adjacent") {
  std::mt19937_64 rng(13);
  for (const FiniteGroup& g : sample_corpus()) {
    std::uniform_int_distribution<int> pick(1, g.order() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const int x = pick(rng), y = pick(rng);
      if (!cyclic_pair(g, x, y)) continue;
      for (int a = 1; a < g.element_order(x); ++a)
        for (int b = 1; b < g.element_order(y); ++b) {
          const int xa = g.power(x, a), yb = g.power(y, b);
          if (xa == FiniteGroup::kIdentity || yb == FiniteGroup::kIdentity)
            continue;
          CHECK(cyclic_pair(g, xa, yb));
        }
    }
  }
}

TEST_CASE("cyclic_pair fast path equals the naive oracle on random pairs") {
  std::mt19937_64 rng(17);
  for (const FiniteGroup& g : sample_corpus()) {
    std::uniform_int_distribution<int> pick(1, g.order() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const int x = pick(rng), y = pick(rng);
      CHECK(cyclic_pair(g, x, y) == cyclic_pair_naive(g, x, y));
    }
  }
}

TEST_CASE("the cyclic graph of a cyclic group is complete") {
  for (int n : {2, 3, 4, 12, 31, 60}) {
    const Graph d = cyclic_graph(cyclic_group(n));
    CHECK(d.edge_count() ==
          static_cast<std::int64_t>(n - 1) * (n - 2) / 2);
    if (n >= 3) CHECK(diameter(d) == DiameterResult::finite(1));
  }
}

TEST_CASE("enhanced power graph degree bound") {
  for (const FiniteGroup& g : sample_corpus()) {
    const Graph epg = enhanced_power_graph(g);
    for (int x = 0; x < g.order(); ++x)
      CHECK(epg.degree(epg.position(x)) >= g.element_order(x) - 1);
  }
}

TEST_CASE("enhanced power graph is connected with a dominating identity") {
  for (const FiniteGroup& g : sample_corpus()) {
    const Graph epg = enhanced_power_graph(g);
    CHECK(diameter(epg).is_finite());
    CHECK(epg.degree(epg.position(0)) == g.order() - 1);
  }
}

TEST_CASE("nonidentity central elements of Z-groups dominate the cyclic graph") {
  for (std::int64_t n : {12, 20, 24, 60}) {
    for (const FiniteGroup& g : z_groups_of_order(n)) {
      const Graph delta = cyclic_graph(g);
      for (int z : center(g).elements) {
        if (z == FiniteGroup::kIdentity) continue;
        CHECK(delta.degree(delta.position(z)) == delta.vertex_count() - 1);
      }
    }
  }
}

TEST_CASE("cyclic graph edges between noncentral vertices are commuting edges") {
  for (const FiniteGroup& g : sample_corpus()) {
    if (g.is_abelian()) continue;
    const Graph delta = cyclic_graph(g);
    const Graph gamma = commuting_graph(g);
    for (int a = 0; a < delta.vertex_count(); ++a) {
      const int pa = gamma.position(delta.label(a));
      if (pa < 0) continue;
      for (int b = a + 1; b < delta.vertex_count(); ++b) {
        const int pb = gamma.position(delta.label(b));
        if (pb < 0) continue;
        if (delta.adjacent(a, b)) CHECK(gamma.adjacent(pa, pb));
      }
    }
  }
}

TEST_CASE("closure caches subgroup sizes that divide the group order") {
  std::mt19937_64 rng(19);
  for (const FiniteGroup& g : sample_corpus()) {
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const ElemSet h = closure(g, {pick(rng), pick(rng)});
      CHECK(g.order() % h.size() == 0);
    }
  }
}
