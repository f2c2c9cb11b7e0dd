#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "malle/permutation.hpp"

namespace malle {

struct GroupLimits {
  std::size_t order_cap = 1'000'000;
};

/// A fully enumerated permutation group. Immutable; copies share storage.
///
/// Elements are kept in canonical order (lexicographic on image arrays), so
/// the identity is always element 0.
class FiniteGroup {
 public:
  /// Enumerates <generators>. Throws DegreeMismatch if a generator has the
  /// wrong degree and OrderCapExceeded once the closure outgrows the cap.
  static FiniteGroup closure(std::span<const Permutation> generators, std::size_t degree,
                             const GroupLimits& limits = {});

  /// Wraps an explicit element set. Throws NotASubgroup unless the set is
  /// closed under composition and contains the identity. Generators are
  /// chosen greedily in canonical order.
  static FiniteGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& element(std::size_t i) const { return data_->elements[i]; }
  const Permutation& identity() const { return data_->elements.front(); }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }
  bool contains(const FiniteGroup& sub) const;

  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  std::uint64_t exponent() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || a.elements() == b.elements();
  }

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  };

  static FiniteGroup build(std::size_t degree, std::vector<Permutation> generators,
                           std::vector<Permutation> elements);

  std::shared_ptr<const Data> data_;
};

/// Dense multiplication table over element indices of one group, for the
/// inner loops of Nielsen enumeration. Index 0 is the identity.
class CayleyTable {
 public:
  using Index = std::uint32_t;

  static constexpr std::size_t kMaxOrder = 4096;

  /// Throws OrderCapExceeded above kMaxOrder.
  explicit CayleyTable(const FiniteGroup& group);

  std::size_t order() const { return order_; }
  Index mul(Index a, Index b) const { return table_[a * order_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::uint64_t k) const;

  /// Indices of the subgroup generated by `gens`, as a membership mask.
  std::vector<bool> generated(std::span<const Index> gens) const;
  bool generates_all(std::span<const Index> gens) const;

 private:
  std::size_t order_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
};

}  // namespace malle
