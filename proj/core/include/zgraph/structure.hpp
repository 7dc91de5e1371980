#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zgraph/group.hpp"

namespace zgraph {

struct StructureOptions {
  /// Cap on the normal-subgroup (and oracle subgroup) join closure.
  int lattice_cap = 10'000;
  /// Largest order accepted by frobenius_bruteforce_oracle.
  int frobenius_oracle_cap = 60;
};

ElemSet center(const FiniteGroup& g);
ElemSet centralizer(const FiniteGroup& g, int x);

/// Closure of all commutators x^{-1} y^{-1} x y.
ElemSet derived_subgroup(const FiniteGroup& g);
/// Derived subgroup of a subgroup (commutators restricted to h).
ElemSet derived_subgroup(const FiniteGroup& g, const ElemSet& h);

/// Derived series terminates at the trivial subgroup.
bool is_solvable(const FiniteGroup& g);

/// Classes ordered by least member, each sorted ascending.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const ElemSet& s);

/// All normal subgroups as the join closure of normal closures of single
/// conjugacy classes; includes the trivial subgroup and g itself. Sorted by
/// (size, elements).
std::vector<ElemSet> normal_subgroups(const FiniteGroup& g,
                                      const StructureOptions& opts = {});

/// Cayley table on cosets of a normal subgroup.
FiniteGroup quotient_group(const FiniteGroup& g, const ElemSet& n);

/// A subgroup of order |g|_p, grown from a maximal-order p-element by
/// repeatedly adjoining a p-element of the normalizer.
ElemSet sylow_subgroup(const FiniteGroup& g, std::int64_t p);

/// Every Sylow subgroup cyclic, tested as: for every prime p | |g| some
/// element has order |g|_p.
bool is_z_group(const FiniteGroup& g);

/// The Sylow p-subgroup has a unique subgroup of order p, tested by counting
/// solutions of x^p = 1 inside it. For odd p this means cyclic; for p = 2,
/// cyclic or generalized quaternion.
bool sylow_cyclic_or_generalized_quaternion(const FiniteGroup& g, std::int64_t p);

/// Every Sylow subgroup normal.
bool is_nilpotent(const FiniteGroup& g);

/// Possesses a normal p-complement (a normal subgroup of order |g|/|g|_p).
bool is_p_nilpotent(const FiniteGroup& g, std::int64_t p,
                    const StructureOptions& opts = {});

struct FrobeniusResult {
  bool is_frobenius = false;
  std::optional<ElemSet> kernel;
  std::optional<int> complement_order;
};

/// Frobenius test via the kernel criterion: some proper nontrivial normal N
/// has C_G(x) <= N for every nonidentity x in N.
FrobeniusResult is_frobenius(const FiniteGroup& g,
                             const StructureOptions& opts = {});

/// Literal-definition oracle: enumerates every subgroup and looks for a
/// proper nontrivial H with H n H^g = 1 for all g outside H. Gated on order
/// (opts.frobenius_oracle_cap).
FrobeniusResult frobenius_bruteforce_oracle(const FiniteGroup& g,
                                            const StructureOptions& opts = {});

/// Every subgroup, as the pairwise-join closure of the cyclic subgroups.
std::vector<ElemSet> all_subgroups(const FiniteGroup& g, int cap = 10'000);

}  // namespace zgraph
