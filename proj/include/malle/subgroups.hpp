#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "malle/conjugacy.hpp"
#include "malle/group.hpp"
#include "malle/numeric.hpp"

namespace malle {

/// Elements of `n` commuting with every element of `g`. Throws NotASubgroup
/// unless g is contained in n.
FiniteGroup centralizer(const FiniteGroup& n, const FiniteGroup& g);

/// The subgroup generated by a and b.
FiniteGroup join(const FiniteGroup& a, const FiniteGroup& b);

bool is_normal(const FiniteGroup& n, const FiniteGroup& g);

/// Every normal subgroup of n, built as joins of normal closures of
/// conjugacy classes. Sorted by descending order, ties by element list.
std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& n);

/// Normal subgroups G with N/G cyclic (G = N included), same ordering.
std::vector<FiniteGroup> normal_subgroups_with_cyclic_quotient(const FiniteGroup& n);

/// Normal subgroups G with N/G abelian, same ordering.
std::vector<FiniteGroup> normal_subgroups_with_abelian_quotient(const FiniteGroup& n);

/// The quotient N/G for a normal subgroup G. Cosets are numbered 0..d-1 in
/// the canonical order of their least element, so the trivial coset is 0.
class CosetMap {
 public:
  CosetMap(FiniteGroup n, FiniteGroup g);

  std::size_t index() const { return representatives_.size(); }
  std::size_t coset_of(const Permutation& x) const;
  const Permutation& representative(std::size_t coset) const { return representatives_[coset]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  /// Order of xG in N/G.
  std::uint64_t coset_order(const Permutation& x) const;

  bool is_cyclic() const;
  bool is_abelian() const;

  /// Cosets generated by `cosets` (as a membership mask over coset ids).
  std::vector<bool> generated(const std::vector<std::size_t>& cosets) const;

 private:
  FiniteGroup n_;
  FiniteGroup g_;
  std::vector<std::size_t> coset_of_;  // by element index of n
  std::vector<Permutation> representatives_;
};

/// A normal subgroup G of N with cyclic quotient, plus the complement data
/// the twisted Frobenius action needs.
struct GNContext {
  FiniteGroup n;
  FiniteGroup g;
  ClassPartition g_classes;
  std::size_t d = 1;  // |N/G|
  bool split = false;
  std::optional<Permutation> tau;  // generator of a cyclic complement, when split
  Permutation coset_generator;  // tau when split, else the least x with <xG> = N/G
  FiniteGroup centralizer;  // Cen_N(G)
  std::size_t d_prime = 1;  // [N : G Cen_N(G)]
  std::size_t d_double_prime = 1;  // [G Cen_N(G) : G]

  /// The element whose powers twist G-classes: tau, or the coset generator
  /// for a non-split pair.
  const Permutation& twist_element() const { return tau ? *tau : coset_generator; }
};

/// Searches N in canonical order for x of order d whose coset generates
/// N/G; such an x spans a cyclic complement. Throws NonCyclicQuotient if
/// N/G is not cyclic, NotASubgroup if G is not a normal subgroup of N.
GNContext find_cyclic_complement(const FiniteGroup& n, const FiniteGroup& g);

/// ind(G): minimum of ind over nontrivial elements. Throws TrivialGroup.
std::size_t group_index(const FiniteGroup& g);

/// a(G) = 1 / ind(G). Throws TrivialGroup.
Rational a_invariant(const FiniteGroup& g);

}  // namespace malle
