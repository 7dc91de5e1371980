#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zgraph {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cayley-table validation
struct InvalidParameter : Error { using Error::Error; };
struct NotLatinSquare : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
// closure / enumeration caps
struct ClosureCapExceeded : Error { using Error::Error; };
struct LatticeCapExceeded : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
// element-level preconditions
struct IdentityElement : Error { using Error::Error; };
// subgroup-level preconditions
struct NotNormal : Error { using Error::Error; };
struct PrimeDoesNotDivide : Error { using Error::Error; };
// graph preconditions
struct TrivialGroup : Error { using Error::Error; };
struct AbelianGroup : Error { using Error::Error; };
// zgen
struct InvalidParams : Error { using Error::Error; };
// text formats
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
// verifier
struct UnknownTheoremId : Error { using Error::Error; };

struct GroupOptions {
  /// Full O(n^3) associativity scan for ingested tables up to this order;
  /// above it, random spot checks only.
  int assoc_full_bound = 512;
  int assoc_spot_samples = 100'000;
  /// Cap on permutation-closure enumeration.
  int closure_cap = 20'000;
  std::uint64_t seed = 0x5DEECE66DULL;
};

/// A finite group as an immutable multiplication table. The identity is
/// normalized to element 0 at construction; inverses and element orders are
/// cached. Instances are safe to share across threads.
class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;

  /// Validates an arbitrary table: Latin square, two-sided identity,
  /// two-sided inverses, associativity (full scan up to
  /// opts.assoc_full_bound, spot checks above), Lagrange on cached orders.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string name,
                                       const GroupOptions& opts = {});

  /// For tables produced by constructors that are groups by construction
  /// (semidirect products, quotients, permutation closures): keeps the cheap
  /// structural checks, skips the cubic associativity scan.
  static FiniteGroup from_generated_table(int n, std::vector<int> flat,
                                          std::string name);

  int order() const { return n_; }
  int mul(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  int inv(int x) const { return inverses_[x]; }
  /// x^g = g^{-1} x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  /// x^k for any integer k (negative k goes through the inverse).
  int power(int x, std::int64_t k) const;
  int element_order(int x) const { return orders_[x]; }
  std::span<const int> element_orders() const { return orders_; }
  bool commutes(int x, int y) const { return mul(x, y) == mul(y, x); }
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }
  /// Copy with a different display name.
  FiniteGroup renamed(std::string new_name) const;

 private:
  FiniteGroup() = default;
  static FiniteGroup build(int n, std::vector<int> flat, std::string name,
                           bool full_assoc_scan, const GroupOptions& opts);

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<int> orders_;
  std::string name_;
  bool abelian_ = false;
};

/// An order-indexed subset of a group's elements (subgroup or plain set).
struct ElemSet {
  std::vector<int> elements;  // sorted ascending
  int parent_order = 0;
  bool subgroup = false;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
};

/// Smallest subgroup containing the seed elements (word closure; the seed
/// may be empty, giving the trivial subgroup).
ElemSet closure(const FiniteGroup& g, std::span<const int> seed);
ElemSet closure(const FiniteGroup& g, std::initializer_list<int> seed);

/// True iff the subgroup has an element whose order equals its size.
bool is_cyclic(const FiniteGroup& g, const ElemSet& subgroup);

/// x and y generate a cyclic subgroup. Fast path: a commuting test before
/// the closure; non-commuting pairs can never generate a cyclic subgroup.
bool cyclic_pair(const FiniteGroup& g, int x, int y);
/// Reference path kept for differential testing: closure first, then the
/// max-order scan, with no commuting shortcut.
bool cyclic_pair_naive(const FiniteGroup& g, int x, int y);

/// Write x as a product of pairwise-commuting elements of prime-power order,
/// one per prime dividing o(x): the p-component is x^{k_p} with
/// k_p = 1 mod p^e and k_p = 0 mod o(x)/p^e. Requires x != identity.
std::map<std::int64_t, int> primary_decomposition(const FiniteGroup& g, int x);

}  // namespace zgraph
