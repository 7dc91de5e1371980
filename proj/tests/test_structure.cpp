#include <doctest.h>

#include <numeric>

#include "zgraph/constructions.hpp"
#include "zgraph/primes.hpp"
#include "zgraph/structure.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

TEST_CASE("center") {
  CHECK(center(cyclic_group(6)).size() == 6);
  CHECK(center(dihedral_group(3)).size() == 1);
  const ElemSet zq8 = center(dicyclic_group(2));
  CHECK(zq8.size() == 2);
  CHECK(zq8.contains(2));  // a^2 = -1
}

TEST_CASE("centralizer") {
  const FiniteGroup s3 = dihedral_group(3);
  CHECK(centralizer(s3, 0).size() == 6);
  CHECK(centralizer(s3, 3).size() == 2);  // a reflection
  // contains <x>
  for (int x = 0; x < s3.order(); ++x) {
    const ElemSet c = centralizer(s3, x);
    for (int p : closure(s3, {x}).elements) CHECK(c.contains(p));
  }
  const FiniteGroup c6 = cyclic_group(6);
  CHECK(centralizer(c6, 1).size() == 6);
}

TEST_CASE("derived_subgroup") {
  CHECK(derived_subgroup(cyclic_group(8)).size() == 1);
  CHECK(derived_subgroup(dihedral_group(3)).size() == 3);
  CHECK(derived_subgroup(dicyclic_group(2)).size() == 2);
  // derived subgroup is normal and the quotient is abelian
  for (const FiniteGroup& g :
       {dihedral_group(4), symmetric_group(4), realize({15, 4, 2})}) {
    const ElemSet d = derived_subgroup(g);
    CHECK(is_normal(g, d));
    CHECK(quotient_group(g, d).is_abelian());
  }
}

TEST_CASE("is_solvable") {
  CHECK(is_solvable(dihedral_group(3)));
  CHECK(is_solvable(cyclic_group(12)));
  CHECK(is_solvable(symmetric_group(4)));
  CHECK_FALSE(is_solvable(alternating_group(5)));
}

TEST_CASE("normal_subgroups") {
  const auto s3 = normal_subgroups(dihedral_group(3));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].size() == 1);
  CHECK(s3[1].size() == 3);
  CHECK(s3[2].size() == 6);

  CHECK(normal_subgroups(cyclic_group(6)).size() == 4);  // one per divisor
  CHECK(normal_subgroups(alternating_group(5)).size() == 2);  // simple
}

TEST_CASE("normal_subgroups agrees with filtering all_subgroups") {
  for (const FiniteGroup& g :
       {dihedral_group(3), cyclic_group(6), dicyclic_group(2),
        dihedral_group(4), alternating_group(4), dicyclic_group(3)}) {
    const auto normals = normal_subgroups(g);
    int filtered = 0;
    for (const ElemSet& h : all_subgroups(g))
      if (is_normal(g, h)) ++filtered;
    CHECK(static_cast<int>(normals.size()) == filtered);
  }
}

TEST_CASE("lattice cap trips on small limits") {
  StructureOptions tight;
  tight.lattice_cap = 2;
  CHECK_THROWS_AS(normal_subgroups(cyclic_group(6), tight),
                  LatticeCapExceeded);
}

TEST_CASE("quotient_group") {
  const FiniteGroup s3 = dihedral_group(3);
  CHECK(quotient_group(s3, closure(s3, {})).order() == 6);
  CHECK(quotient_group(s3, closure(s3, {1})).order() == 2);

  const FiniteGroup q8 = dicyclic_group(2);
  const FiniteGroup klein = quotient_group(q8, center(q8));
  CHECK(klein.order() == 4);
  for (int x = 1; x < 4; ++x) CHECK(klein.element_order(x) == 2);

  CHECK_THROWS_AS(quotient_group(s3, closure(s3, {3})), NotNormal);
}

TEST_CASE("sylow_subgroup") {
  CHECK(sylow_subgroup(cyclic_group(6), 3).size() == 3);
  CHECK(sylow_subgroup(dihedral_group(3), 3).size() == 3);
  CHECK(sylow_subgroup(symmetric_group(4), 2).size() == 8);
  CHECK(sylow_subgroup(symmetric_group(4), 3).size() == 3);
  CHECK_THROWS_AS(sylow_subgroup(cyclic_group(6), 5), PrimeDoesNotDivide);
  CHECK_THROWS_AS(sylow_subgroup(cyclic_group(8), 4), InvalidParameter);
  // |P| = |G|_p exactly
  for (const FiniteGroup& g :
       {symmetric_group(4), dicyclic_group(6), realize({15, 4, 2})}) {
    for (std::int64_t p : prime_divisors(g.order())) {
      const ElemSet syl = sylow_subgroup(g, p);
      CHECK(syl.size() == p_part(g.order(), p));
    }
  }
}

TEST_CASE("is_z_group") {
  CHECK(is_z_group(dihedral_group(3)));       // square-free order
  CHECK_FALSE(is_z_group(dicyclic_group(2)));  // Q8 is its own Sylow 2
  CHECK(is_z_group(cyclic_group(60)));
  CHECK(is_z_group(dicyclic_group(3)));  // C3 x| C4
  CHECK_FALSE(is_z_group(symmetric_group(4)));
}

TEST_CASE("is_z_group agrees with testing Sylow cyclicity directly") {
  for (const FiniteGroup& g :
       {cyclic_group(24), dihedral_group(6), dicyclic_group(2),
        dicyclic_group(3), symmetric_group(4), alternating_group(4),
        frobenius_group_20(), realize({15, 4, 2})}) {
    bool all_cyclic = true;
    for (std::int64_t p : prime_divisors(g.order()))
      all_cyclic = all_cyclic && is_cyclic(g, sylow_subgroup(g, p));
    CHECK(is_z_group(g) == all_cyclic);
  }
}

TEST_CASE("sylow_cyclic_or_generalized_quaternion") {
  CHECK(sylow_cyclic_or_generalized_quaternion(dicyclic_group(2), 2));
  CHECK_FALSE(sylow_cyclic_or_generalized_quaternion(
      direct_product(cyclic_group(2), cyclic_group(2)), 2));
  CHECK(sylow_cyclic_or_generalized_quaternion(cyclic_group(9), 3));
  CHECK_FALSE(sylow_cyclic_or_generalized_quaternion(dihedral_group(4), 2));
  CHECK(sylow_cyclic_or_generalized_quaternion(dicyclic_group(4), 2));  // Q16
}

TEST_CASE("is_nilpotent") {
  CHECK(is_nilpotent(cyclic_group(12)));
  CHECK(is_nilpotent(dicyclic_group(2)));
  CHECK_FALSE(is_nilpotent(dihedral_group(3)));
  CHECK(is_nilpotent(direct_product(dicyclic_group(2), cyclic_group(3))));
  CHECK_FALSE(is_nilpotent(symmetric_group(4)));
}

TEST_CASE("is_p_nilpotent") {
  const FiniteGroup s3 = dihedral_group(3);
  CHECK(is_p_nilpotent(s3, 2));        // normal complement A3
  CHECK_FALSE(is_p_nilpotent(s3, 3));  // no normal subgroup of order 2
  CHECK_THROWS_AS(is_p_nilpotent(s3, 5), PrimeDoesNotDivide);

  const FiniteGroup nil = direct_product(dicyclic_group(2), cyclic_group(3));
  CHECK(is_p_nilpotent(nil, 2));
  CHECK(is_p_nilpotent(nil, 3));
}

TEST_CASE("is_frobenius") {
  CHECK_FALSE(is_frobenius(cyclic_group(6)).is_frobenius);

  const FrobeniusResult s3 = is_frobenius(dihedral_group(3));
  REQUIRE(s3.is_frobenius);
  CHECK(s3.kernel->size() == 3);
  CHECK(s3.complement_order == 2);

  const FrobeniusResult g21 = is_frobenius(realize({7, 3, 2}));
  REQUIRE(g21.is_frobenius);
  CHECK(g21.kernel->size() == 7);
  CHECK(g21.complement_order == 3);

  CHECK_FALSE(is_frobenius(dicyclic_group(2)).is_frobenius);
  CHECK_FALSE(is_frobenius(dicyclic_group(3)).is_frobenius);
  CHECK(is_frobenius(alternating_group(4)).is_frobenius);  // kernel V4
  CHECK(is_frobenius(frobenius_group_20()).is_frobenius);
  CHECK(is_frobenius(dihedral_group(5)).is_frobenius);
  CHECK_FALSE(is_frobenius(dihedral_group(4)).is_frobenius);
}

TEST_CASE("frobenius_bruteforce_oracle") {
  const FrobeniusResult s3 = frobenius_bruteforce_oracle(dihedral_group(3));
  REQUIRE(s3.is_frobenius);
  CHECK(s3.complement_order == 2);
  CHECK(s3.kernel->size() == 3);
  CHECK(s3.kernel->subgroup);

  CHECK_FALSE(frobenius_bruteforce_oracle(dicyclic_group(2)).is_frobenius);
  CHECK(frobenius_bruteforce_oracle(realize({7, 3, 2})).is_frobenius);

  StructureOptions tight;
  tight.frobenius_oracle_cap = 20;
  CHECK_THROWS_AS(frobenius_bruteforce_oracle(symmetric_group(4), tight),
                  OrderCapExceeded);
}

TEST_CASE("is_frobenius matches the oracle, kernels included") {
  for (const FiniteGroup& g :
       {dihedral_group(3), dihedral_group(4), dihedral_group(5),
        dihedral_group(6), dihedral_group(7), cyclic_group(12),
        dicyclic_group(2), dicyclic_group(3), dicyclic_group(5),
        alternating_group(4), symmetric_group(4), frobenius_group_20(),
        realize({7, 3, 2}), realize({5, 4, 2}), alternating_group(5),
        direct_product(cyclic_group(2), cyclic_group(2))}) {
    const FrobeniusResult fast = is_frobenius(g);
    const FrobeniusResult slow = frobenius_bruteforce_oracle(g);
    CHECK(fast.is_frobenius == slow.is_frobenius);
    if (fast.is_frobenius) {
      CHECK(fast.kernel->elements == slow.kernel->elements);
      CHECK(fast.complement_order == slow.complement_order);
    }
  }
}

TEST_CASE("Z-group structure facts") {
  // derived subgroup cyclic, Hall, with cyclic quotient; p-nilpotent at the
  // smallest prime; solvable; Frobenius implies trivial center
  for (std::int64_t n : {6, 20, 21, 30, 42, 55, 60}) {
    for (const FiniteGroup& g : z_groups_of_order(n)) {
      REQUIRE(is_z_group(g));
      const ElemSet d = derived_subgroup(g);
      CHECK(is_cyclic(g, d));
      CHECK(std::gcd<std::int64_t>(d.size(), g.order() / d.size()) == 1);
      bool q_cyclic = false;
      const FiniteGroup q = quotient_group(g, d);
      for (int x = 0; x < q.order() && !q_cyclic; ++x)
        q_cyclic = q.element_order(x) == q.order();
      CHECK(q_cyclic);
      CHECK(is_p_nilpotent(g, prime_divisors(g.order()).front()));
      CHECK(is_solvable(g));
      if (is_frobenius(g).is_frobenius) CHECK(center(g).size() == 1);
    }
  }
}

TEST_CASE("center sits inside every centralizer") {
  for (const FiniteGroup& g :
       {dicyclic_group(3), dihedral_group(6), symmetric_group(4)}) {
    const ElemSet z = center(g);
    for (int x = 0; x < g.order(); ++x) {
      const ElemSet c = centralizer(g, x);
      for (int v : z.elements) CHECK(c.contains(v));
    }
  }
}
