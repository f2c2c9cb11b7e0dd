#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "malle/conjugacy.hpp"
#include "malle/group.hpp"
#include "malle/invariants.hpp"

namespace malle {

struct NielsenLimits {
  std::size_t candidate_cap = 100'000'000;  // DFS prefix states per enumeration
  std::size_t tuple_cap = 10'000'000;  // stored tuples / canonical keys
};

/// A multiset of nontrivial G-classes, keyed by class id.
struct ClassVector {
  std::map<std::size_t, std::size_t> multiplicities;

  std::size_t length() const;
  std::size_t weight(const ClassPartition& classes) const;  // sum of mult * ind
  ClassVector operator+(const ClassVector& other) const;
  ClassVector scaled(std::size_t factor) const;

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
  friend auto operator<=>(const ClassVector&, const ClassVector&) = default;
};

using ElementIndex = CayleyTable::Index;
using Tuple = std::vector<ElementIndex>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

/// Tuples of elements of G, with N (a group normalizing G, often N = G)
/// acting by simultaneous conjugation. Elements are handled as indices into
/// G's canonical element list.
class NielsenSpace {
 public:
  /// Throws NotASubgroup unless N normalizes G.
  NielsenSpace(FiniteGroup g, FiniteGroup n, NielsenLimits limits = {});

  const FiniteGroup& g() const { return g_; }
  const FiniteGroup& n() const { return n_; }
  const ClassPartition& classes() const { return classes_; }
  const CayleyTable& table() const { return table_; }
  const NielsenLimits& limits() const { return limits_; }

  ElementIndex index_of(const Permutation& p) const;
  Tuple to_tuple(std::span<const Permutation> entries) const;
  std::vector<Permutation> to_permutations(const Tuple& t) const;

  /// x^{-1} g x for the element of N with index `n_index`.
  ElementIndex conjugate(ElementIndex g, std::size_t n_index) const {
    return conjugation_[n_index * g_.order() + g];
  }
  const std::vector<std::size_t>& n_generator_indices() const { return n_generators_; }

  /// Least tuple in the N-conjugation orbit of t.
  Tuple canonical(const Tuple& t) const;
  /// Least tuple among the conjugates of t by the listed elements of N
  /// (indices into N); `conjugators` must contain the identity.
  Tuple canonical(const Tuple& t, std::span<const std::size_t> conjugators) const;

  /// Elements of N (as indices) whose conjugation fixes cv as a multiset.
  std::vector<std::size_t> stabilizer(const ClassVector& cv) const;

  bool product_is_one(const Tuple& t) const;
  bool generates(const Tuple& t) const;
  ClassVector class_vector(const Tuple& t) const;

 private:
  FiniteGroup g_;
  FiniteGroup n_;
  ClassPartition classes_;
  CayleyTable table_;
  NielsenLimits limits_;
  std::vector<ElementIndex> conjugation_;
  std::vector<std::size_t> n_generators_;
};

struct NielsenTuple {
  std::vector<Permutation> entries;
  std::size_t length() const { return entries.size(); }
};

/// Ni(cv): tuples of nontrivial elements with product one that generate G
/// and whose class multiset is cv, in lexicographic order. Throws
/// EnumerationCapExceeded, TrivialClassPresent if cv names the identity class.
std::vector<Tuple> enumerate_nielsen(const NielsenSpace& space, const ClassVector& cv);

/// Q_i: (.., g_i, g_{i+1}, ..) -> (.., g_i g_{i+1} g_i^{-1}, g_i, ..), 1 <= i <= k-1.
/// Throws IndexOutOfRange.
Tuple braid_generator(const NielsenSpace& space, const Tuple& t, std::size_t i);
Tuple braid_generator_inverse(const NielsenSpace& space, const Tuple& t, std::size_t i);
NielsenTuple braid_generator(const NielsenTuple& t, std::size_t i);

enum class Traversal { BreadthFirst, DepthFirst };

struct BraidOrbit {
  Tuple canonical_key;  // least N-canonical tuple in the orbit
  NielsenTuple canonical_rep;
  std::size_t size = 0;  // number of N-classes of tuples
  ClassVector class_vector;
};

struct BraidDecomposition {
  ClassVector class_vector;
  std::vector<std::size_t> conjugators;  // Stab_N(cv), indices into N
  std::vector<BraidOrbit> orbits;  // ordered by canonical_key
  std::unordered_map<Tuple, std::size_t, TupleHash> orbit_of;  // canonical key -> orbit
  std::size_t class_count = 0;  // |Ni(cv) / Stab_N(cv)|
  std::size_t tuple_count = 0;  // |Ni(cv)|
};

/// Orbits of the braid generators on Ni(cv) modulo conjugation by the
/// stabilizer of cv in N (the elements of N that keep tuples inside Ni(cv)).
BraidDecomposition braid_orbits(const NielsenSpace& space, const ClassVector& cv,
                                Traversal order = Traversal::BreadthFirst);

/// Model of the arithmetic action: orbit O is kept when the entrywise image
/// g -> tau^{-e} g^q tau^e of its representative is again a Nielsen tuple
/// lying in O. Returns orbit indices. The twist must be over the same G.
std::vector<std::size_t> frobenius_stable_orbits(const NielsenSpace& space,
                                                 const BraidDecomposition& decomposition,
                                                 const TwistSpec& spec);

struct ProbePoint {
  std::size_t m = 0;
  std::size_t orbit_count = 0;
  std::size_t class_count = 0;
  bool complete = true;
};

/// Orbit counts for base + m * pad, m = 0..max_m. Stops at the first m that
/// exceeds the enumeration caps and marks that point incomplete.
std::vector<ProbePoint> conway_parker_probe(const NielsenSpace& space, const ClassVector& base,
                                            const ClassVector& pad, std::size_t max_m);

}  // namespace malle
