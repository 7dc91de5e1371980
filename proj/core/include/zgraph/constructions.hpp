#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zgraph/group.hpp"

namespace zgraph {

/// C_n, order n (n >= 1).
FiniteGroup cyclic_group(int n);

/// D_n of order 2n (n >= 1; nonabelian for n >= 3).
FiniteGroup dihedral_group(int n);

/// Dic_n of order 4n: a^{2n} = 1, b^2 = a^n, b a b^{-1} = a^{-1} (n >= 2).
/// Dic_{2^k} are the generalized quaternion groups; Dic_2 = Q8.
FiniteGroup dicyclic_group(int n);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// A permutation of 0..d-1 stored as its image array.
using Permutation = std::vector<int>;

/// Parse 0-based disjoint-cycle notation, e.g. "(0 1)(2 3 4)". The result
/// has degree max(point)+1, or min_degree if larger.
Permutation parse_cycles(std::string_view text, int min_degree = 0);

/// Breadth-first closure of the generated permutation group, returned as a
/// Cayley table. Throws ClosureCapExceeded past opts.closure_cap elements.
FiniteGroup from_permutation_generators(std::vector<Permutation> gens,
                                        std::string name,
                                        const GroupOptions& opts = {});

FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// The Frobenius group of order 20 acting on 5 points.
FiniteGroup frobenius_group_20();

}  // namespace zgraph
